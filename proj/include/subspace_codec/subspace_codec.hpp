#pragma once

#include "subspace_codec/field.hpp"
#include "subspace_codec/matrix.hpp"
#include "subspace_codec/grassmann.hpp"
#include "subspace_codec/skeleton.hpp"
#include "subspace_codec/ferrers.hpp"
#include "subspace_codec/rank_metric.hpp"
#include "subspace_codec/multilevel.hpp"
#include "subspace_codec/verify.hpp"
#include "subspace_codec/code_file.hpp"
