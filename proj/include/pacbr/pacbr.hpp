#ifndef PACBR_PACBR_HPP
#define PACBR_PACBR_HPP

#include "pacbr/change.hpp"
#include "pacbr/entrenchment.hpp"
#include "pacbr/errors.hpp"
#include "pacbr/formula.hpp"
#include "pacbr/generator.hpp"
#include "pacbr/harness.hpp"
#include "pacbr/parse.hpp"
#include "pacbr/proof.hpp"
#include "pacbr/report.hpp"
#include "pacbr/semantics.hpp"
#include "pacbr/session.hpp"
#include "pacbr/truth.hpp"

#endif  // PACBR_PACBR_HPP
