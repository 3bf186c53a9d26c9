#pragma once

#include "jointgamma/bounds.hpp"
#include "jointgamma/coeffs.hpp"
#include "jointgamma/errors.hpp"
#include "jointgamma/gamma.hpp"
#include "jointgamma/identities.hpp"
#include "jointgamma/jointfactor.hpp"
#include "jointgamma/polygamma.hpp"
#include "jointgamma/product.hpp"
#include "jointgamma/reference.hpp"
#include "jointgamma/summation.hpp"
