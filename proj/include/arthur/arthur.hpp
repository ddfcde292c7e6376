#pragma once

#include "arthur/arthur_param.hpp"
#include "arthur/atobe.hpp"
#include "arthur/aubert.hpp"
#include "arthur/cuspidal.hpp"
#include "arthur/ess_speh.hpp"
#include "arthur/ext_multi_segment.hpp"
#include "arthur/formal_sum.hpp"
#include "arthur/gl_calculus.hpp"
#include "arthur/half_int.hpp"
#include "arthur/insertion.hpp"
#include "arthur/irreducibility.hpp"
#include "arthur/ladder.hpp"
#include "arthur/langlands.hpp"
#include "arthur/lc_rc.hpp"
#include "arthur/nonvanishing.hpp"
#include "arthur/reorder.hpp"
#include "arthur/segment.hpp"
