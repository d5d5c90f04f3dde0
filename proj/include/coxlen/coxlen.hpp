#pragma once

#include "coxlen/budget.hpp"
#include "coxlen/certificates.hpp"
#include "coxlen/classification.hpp"
#include "coxlen/coxeter_matrix.hpp"
#include "coxlen/errors.hpp"
#include "coxlen/geometric_rep.hpp"
#include "coxlen/graph_enum.hpp"
#include "coxlen/json_io.hpp"
#include "coxlen/orientations.hpp"
#include "coxlen/reflection_length.hpp"
#include "coxlen/systems.hpp"
#include "coxlen/verify_suites.hpp"
#include "coxlen/word_engine.hpp"
