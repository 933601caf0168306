#pragma once

#include "catalog.hpp"
#include "checked.hpp"
#include "classifier.hpp"
#include "curve.hpp"
#include "descriptor.hpp"
#include "errors.hpp"
#include "homology.hpp"
#include "json_io.hpp"
#include "lattice.hpp"
#include "motivic.hpp"
#include "parallel.hpp"
#include "report.hpp"
#include "series.hpp"
#include "smith.hpp"
#include "spectral.hpp"
