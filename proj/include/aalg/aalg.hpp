#pragma once

#include "aalg/algebraize.hpp"
#include "aalg/consequence.hpp"
#include "aalg/corpus.hpp"
#include "aalg/dsl.hpp"
#include "aalg/enumerate.hpp"
#include "aalg/finalg.hpp"
#include "aalg/functors.hpp"
#include "aalg/leibniz.hpp"
#include "aalg/logic.hpp"
#include "aalg/random.hpp"
#include "aalg/syntax.hpp"
#include "aalg/verdict.hpp"
