#pragma once

#include "graduation/countries.hpp"
#include "graduation/faulhaber.hpp"
#include "graduation/gini_estimators.hpp"
#include "graduation/graduation_model.hpp"
#include "graduation/rational.hpp"
#include "graduation/reference_distributions.hpp"
#include "graduation/version.hpp"
