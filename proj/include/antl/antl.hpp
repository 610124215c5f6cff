#pragma once

#include "antl/center.hpp"
#include "antl/commutant.hpp"
#include "antl/element.hpp"
#include "antl/embedding.hpp"
#include "antl/enumerate.hpp"
#include "antl/fock.hpp"
#include "antl/io.hpp"
#include "antl/normal_form.hpp"
#include "antl/qpoly.hpp"
#include "antl/verify.hpp"
#include "antl/word.hpp"
