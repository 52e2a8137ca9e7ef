#ifndef RISKAX_RISKAX_HPP
#define RISKAX_RISKAX_HPP

#include "riskax/audit.hpp"
#include "riskax/choquet.hpp"
#include "riskax/dynamic.hpp"
#include "riskax/envelope.hpp"
#include "riskax/probability.hpp"
#include "riskax/static_metrics.hpp"

#endif  // RISKAX_RISKAX_HPP
