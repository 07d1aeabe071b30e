// Umbrella header.

#pragma once

#include "qrr/series.hpp"
#include "qrr/pochhammer.hpp"
#include "qrr/term.hpp"
#include "qrr/identity.hpp"
#include "qrr/records.hpp"
#include "qrr/bailey.hpp"
#include "qrr/telescoping.hpp"
#include "qrr/checks.hpp"
#include "qrr/binomial.hpp"
#include "qrr/report.hpp"
