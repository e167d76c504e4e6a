#pragma once

#include "krs/aks.hpp"
#include "krs/constructions.hpp"
#include "krs/core.hpp"
#include "krs/generators.hpp"
#include "krs/heyting.hpp"
#include "krs/indexed.hpp"
#include "krs/io.hpp"
#include "krs/oca.hpp"
#include "krs/polarity.hpp"
#include "krs/polynomial.hpp"
#include "krs/report.hpp"
#include "krs/stack_ops.hpp"
#include "krs/suite.hpp"
