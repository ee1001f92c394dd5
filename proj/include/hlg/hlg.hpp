#pragma once

#include "hlg/rational.hpp"
#include "hlg/rootdata.hpp"
#include "hlg/apartment.hpp"
#include "hlg/gallery.hpp"
#include "hlg/folding.hpp"
#include "hlg/residue.hpp"
#include "hlg/qpoly.hpp"
#include "hlg/hlengine.hpp"
#include "hlg/oracles.hpp"
#include "hlg/tableaux.hpp"
#include "hlg/io.hpp"
#include "hlg/verify.hpp"
