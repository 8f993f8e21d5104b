#pragma once

#include "wzbounds/capacity.hpp"
#include "wzbounds/codes.hpp"
#include "wzbounds/experiments.hpp"
#include "wzbounds/gmi.hpp"
#include "wzbounds/model.hpp"
#include "wzbounds/partitions.hpp"
#include "wzbounds/rd.hpp"
#include "wzbounds/wz.hpp"
