#pragma once

#include "entagg/aggregation.hpp"
#include "entagg/bounds.hpp"
#include "entagg/coupling.hpp"
#include "entagg/dist.hpp"
#include "entagg/errors.hpp"
#include "entagg/majorization.hpp"
#include "entagg/numeric.hpp"
#include "entagg/tunstall.hpp"
