#pragma once

#include "knotlab/bracket.hpp"
#include "knotlab/core.hpp"
#include "knotlab/diagram.hpp"
#include "knotlab/lambda.hpp"
#include "knotlab/laurent.hpp"
#include "knotlab/matrix.hpp"
#include "knotlab/plat.hpp"
#include "knotlab/seifert.hpp"
#include "knotlab/sequiv.hpp"
