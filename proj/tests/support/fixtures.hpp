#pragma once

// Named problem instances shared by the unit suites and the acceptance run.

#include <vector>

#include "exactdual/extended_lp.hpp"
#include "exactdual/standard_lp.hpp"
#include "exactdual/vcsp.hpp"

namespace testing_support {

using namespace exactdual;

inline const Ext kBot = Ext::bot();
inline const Ext kTop = Ext::top();

/// min 6x0 + 6x1 subject to 2x0 + x1 >= 4, x0 + 2x1 >= 5, written as <=.
inline StandardLP worked_primal() { return {QMat{{-2, -1}, {-1, -2}}, QVec{-4, -5}, QVec{6, 6}}; }

/// Rice and lentils: at least 30 g protein and 700 kcal at 0.92 and 1.75
/// euro per kilogram.
inline StandardLP cheap_lunch() {
  return {QMat{{-27, -90}, {-1300, -1150}}, QVec{-30, -700}, QVec{Rat::make(23, 25), Rat::make(7, 4)}};
}

/// The same lunch with lentils priced at top.
inline ExtendedLP cheap_lunch_no_lentils() {
  return {EMat{{-27, -90}, {-1300, -1150}}, EVec{-30, -700}, EVec{Rat::make(23, 25), kTop}};
}

struct OppositesCase {
  Optimum p;
  Optimum q;
  bool expected;
};

/// The fourteen listed cases of the opposites relation, in order.
inline std::vector<OppositesCase> opposites_table() {
  const Optimum none;
  return {
      {Ext(5), Ext(-5), true},      {Ext(-3), Ext(3), true},     {Ext(0), Ext(0), true},
      {kTop, kBot, true},           {kBot, kTop, true},          {none, none, false},
      {none, Ext(0), false},        {Ext(1), none, false},       {Ext(6), Ext(-4), false},
      {Ext(2), Ext(2), false},      {kTop, Ext(7), false},       {Ext(-9), kTop, false},
      {Ext(0), kBot, false},        {kTop, kTop, false},
  };
}

/// Matrices breaking one hypothesis of the extended alternative, each with a
/// primal x and a dual y that both pass their checks.
struct PreconditionFixture {
  const char* name;
  EMat A;
  EVec b;
  QVec x;
  QVec y;
  FarkasPrecondition violated;
};

inline std::vector<PreconditionFixture> precondition_fixtures() {
  return {
      {"bot and top in one row", EMat{{kBot, kTop}, {0, -1}}, EVec{0, -1}, QVec{1, 1}, QVec{0, 1},
       FarkasPrecondition::BotTopInRow},
      {"bot and top in one column", EMat{{kBot}, {kTop}}, EVec{-1, 0}, QVec{0}, QVec{1, 1},
       FarkasPrecondition::BotTopInColumn},
      {"top in a row where b is top", EMat{{kTop}, {-1}}, EVec{kTop, -1}, QVec{1}, QVec{0, 1},
       FarkasPrecondition::TopInRowWhereBIsTop},
      {"bot in a row where b is bot", EMat{{kBot}}, EVec{kBot}, QVec{1}, QVec{0},
       FarkasPrecondition::BotInRowWhereBIsBot},
  };
}

/// Invalid extended LPs P with their duals Q, where strong duality fails.
struct InvalidPair {
  const char* name;
  ExtendedLP P;
  ExtendedLP Q;
  ElpCondition first_violation;
};

inline std::vector<InvalidPair> invalid_pairs() {
  return {
      {"column with bot and top", ExtendedLP{EMat{{kBot}, {kTop}}, EVec{-1, 0}, EVec{0}},
       ExtendedLP{EMat{{kTop, kBot}}, EVec{0}, EVec{-1, 0}}, ElpCondition::hAj},
      {"bot row with bot bound", ExtendedLP{EMat{{kBot}}, EVec{kBot}, EVec{0}},
       ExtendedLP{EMat{{kTop}}, EVec{0}, EVec{kBot}}, ElpCondition::hbA},
      {"top row with top bound", ExtendedLP{EMat{{kTop}, {-1}}, EVec{kTop, -1}, EVec{0}},
       ExtendedLP{EMat{{kBot, 1}}, EVec{0}, EVec{kTop, -1}}, ElpCondition::hAb},
  };
}

/// Two variables, labels standing for 9/10 and -1/2, one unary absolute value
/// term on each variable.
inline VcspInstance abs_instance() {
  VcspInstance I;
  I.domain_size = 2;
  I.num_vars = 2;
  I.functions.push_back(CostFunction{1, 2, {Rat::make(9, 10), Rat::make(1, 2)}});
  I.terms = {VcspTerm{0, {0}}, VcspTerm{0, {1}}};
  I.labels = {"9/10", "-1/2"};
  return I;
}

/// Binary cost 1 on equal labels and 0 on distinct ones.
inline CostFunction max_cut_function() { return CostFunction{2, 2, {1, 0, 0, 1}}; }

}  // namespace testing_support
