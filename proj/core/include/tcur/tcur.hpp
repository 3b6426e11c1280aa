#pragma once

#include "tcur/cur.hpp"
#include "tcur/datasets.hpp"
#include "tcur/errors.hpp"
#include "tcur/index_set.hpp"
#include "tcur/parallel.hpp"
#include "tcur/samplers.hpp"
#include "tcur/spectral.hpp"
#include "tcur/tensor3.hpp"
#include "tcur/tensor_io.hpp"
#include "tcur/tproduct.hpp"
#include "tcur/tsvd.hpp"
