#pragma once

#include "holodual/domains.hpp"
#include "holodual/duality.hpp"
#include "holodual/error.hpp"
#include "holodual/growth.hpp"
#include "holodual/hardy.hpp"
#include "holodual/seeded.hpp"
#include "holodual/spectral.hpp"
