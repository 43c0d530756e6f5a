#pragma once

#include "bettiforge/multiset.hpp"
#include "bettiforge/exact.hpp"
#include "bettiforge/pfaffian.hpp"
#include "bettiforge/gorenstein.hpp"
#include "bettiforge/aci.hpp"
#include "bettiforge/structure.hpp"
#include "bettiforge/io.hpp"
