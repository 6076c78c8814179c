#ifndef CATZERO_CATZERO_HPP
#define CATZERO_CATZERO_HPP

#include "catzero/complex.hpp"
#include "catzero/element_set.hpp"
#include "catzero/error.hpp"
#include "catzero/geodesic.hpp"
#include "catzero/halfspace.hpp"
#include "catzero/interval.hpp"
#include "catzero/pip.hpp"
#include "catzero/point.hpp"
#include "catzero/recsys.hpp"
#include "catzero/touring.hpp"
#include "catzero/vertex_cover.hpp"

#endif // CATZERO_CATZERO_HPP
