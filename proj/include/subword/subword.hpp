#pragma once

#include "chebyshev.hpp"
#include "errors.hpp"
#include "mobius.hpp"
#include "morse.hpp"
#include "poset.hpp"
#include "verify.hpp"
#include "words.hpp"
