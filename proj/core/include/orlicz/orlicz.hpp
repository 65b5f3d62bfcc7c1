#pragma once

#include "orlicz/classical.hpp"
#include "orlicz/errors.hpp"
#include "orlicz/ext_real.hpp"
#include "orlicz/io.hpp"
#include "orlicz/kernel.hpp"
#include "orlicz/maps.hpp"
#include "orlicz/measure.hpp"
#include "orlicz/modular.hpp"
#include "orlicz/profile.hpp"
#include "orlicz/quadrature.hpp"
#include "orlicz/quantum.hpp"
#include "orlicz/young.hpp"
#include "orlicz/young_checks.hpp"
