/*
 * Copyright 2026 The katd authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <memory>
#include <string>
#include <vector>

namespace katd {

// Two-sorted term language over the algebra signature: element terms denote
// transition systems, test terms denote state predicates. Variables are
// indices into the owning law's per-sort name tables, so expression trees
// are shareable between laws with different variable names.

enum class ElemOp {
  Var,
  Zero,
  One,
  Top,
  Add,
  Mul,
  Star,
  Plus,
  Omega,
  Embed,  // a test injected as a subidentity element
};

enum class TestOp {
  Var,
  Zero,
  One,
  Not,
  Join,
  Meet,
  Implies,
  Fdia,
  Bdia,
  Fbox,
  Bbox,
  Dom,
  Cod,
  MaxPart,  // p minus <e>p
  MinPart,  // p minus <e|p
  Nabla,    // greatest fixpoint of <e>
  Cvg,      // complement of Nabla
  MuDia,    // least fixpoint of x -> t + <e>x
  NuDia,    // greatest fixpoint of x -> t + <e>x
};

struct ElemExpr;
struct TestExpr;
using ElemPtr = std::shared_ptr<const ElemExpr>;
using TestPtr = std::shared_ptr<const TestExpr>;

struct ElemExpr {
  ElemOp op;
  int var = -1;       // ElemOp::Var only
  ElemPtr lhs, rhs;   // Add/Mul both, Star/Plus/Omega in lhs
  TestPtr test;       // Embed only
};

struct TestExpr {
  TestOp op;
  int var = -1;       // TestOp::Var only
  TestPtr tlhs, trhs; // test children; modal operators carry their test in tlhs
  ElemPtr elem;       // element child of modal operators
};

// Builders. Terse on purpose: the library file spells out ninety-odd laws
// and reads best when a term looks like its mathematical notation.
namespace lx {

ElemPtr ev(int var);
ElemPtr e0();
ElemPtr e1();
ElemPtr etop();
ElemPtr add(ElemPtr a, ElemPtr b);
ElemPtr mul(ElemPtr a, ElemPtr b);
ElemPtr star(ElemPtr a);
ElemPtr plus(ElemPtr a);
ElemPtr omega(ElemPtr a);
ElemPtr emb(TestPtr p);

TestPtr tv(int var);
TestPtr t0();
TestPtr t1();
TestPtr tnot(TestPtr p);
TestPtr join(TestPtr p, TestPtr q);
TestPtr meet(TestPtr p, TestPtr q);
TestPtr impl(TestPtr p, TestPtr q);
TestPtr fdia(ElemPtr a, TestPtr p);
TestPtr bdia(ElemPtr a, TestPtr p);
TestPtr fbox(ElemPtr a, TestPtr p);
TestPtr bbox(ElemPtr a, TestPtr p);
TestPtr dom(ElemPtr a);
TestPtr cod(ElemPtr a);
TestPtr maxpart(ElemPtr a, TestPtr p);
TestPtr minpart(ElemPtr a, TestPtr p);
TestPtr nabla(ElemPtr a);
TestPtr cvg(ElemPtr a);
TestPtr mu_dia(ElemPtr a, TestPtr p);
TestPtr nu_dia(ElemPtr a, TestPtr p);

}  // namespace lx

/// ASCII rendering with the variable names substituted in, e.g.
/// "<a*>p <= ..." pieces; used for reports and the library export.
std::string to_string(const ElemPtr& e, const std::vector<std::string>& elem_names,
                      const std::vector<std::string>& test_names);
std::string to_string(const TestPtr& t, const std::vector<std::string>& elem_names,
                      const std::vector<std::string>& test_names);

}  // namespace katd
