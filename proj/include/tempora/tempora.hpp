#pragma once

#include "tempora/affine.hpp"
#include "tempora/diagram.hpp"
#include "tempora/error.hpp"
#include "tempora/json_io.hpp"
#include "tempora/normal_form.hpp"
#include "tempora/perm.hpp"
#include "tempora/rational.hpp"
#include "tempora/relations.hpp"
#include "tempora/rhythm.hpp"
#include "tempora/syntax.hpp"
#include "tempora/term.hpp"
#include "tempora/wreath.hpp"
