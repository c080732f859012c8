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
#include "katd/laws/expr.hpp"

namespace katd {
namespace lx {

namespace {

ElemPtr enode(ElemOp op, int var, ElemPtr lhs, ElemPtr rhs, TestPtr test) {
  return std::make_shared<const ElemExpr>(ElemExpr{op, var, std::move(lhs), std::move(rhs), std::move(test)});
}

TestPtr tnode(TestOp op, int var, TestPtr tlhs, TestPtr trhs, ElemPtr elem) {
  return std::make_shared<const TestExpr>(TestExpr{op, var, std::move(tlhs), std::move(trhs), std::move(elem)});
}

}  // namespace

ElemPtr ev(int var) { return enode(ElemOp::Var, var, nullptr, nullptr, nullptr); }
ElemPtr e0() { return enode(ElemOp::Zero, -1, nullptr, nullptr, nullptr); }
ElemPtr e1() { return enode(ElemOp::One, -1, nullptr, nullptr, nullptr); }
ElemPtr etop() { return enode(ElemOp::Top, -1, nullptr, nullptr, nullptr); }
ElemPtr add(ElemPtr a, ElemPtr b) { return enode(ElemOp::Add, -1, std::move(a), std::move(b), nullptr); }
ElemPtr mul(ElemPtr a, ElemPtr b) { return enode(ElemOp::Mul, -1, std::move(a), std::move(b), nullptr); }
ElemPtr star(ElemPtr a) { return enode(ElemOp::Star, -1, std::move(a), nullptr, nullptr); }
ElemPtr plus(ElemPtr a) { return enode(ElemOp::Plus, -1, std::move(a), nullptr, nullptr); }
ElemPtr omega(ElemPtr a) { return enode(ElemOp::Omega, -1, std::move(a), nullptr, nullptr); }
ElemPtr emb(TestPtr p) { return enode(ElemOp::Embed, -1, nullptr, nullptr, std::move(p)); }

TestPtr tv(int var) { return tnode(TestOp::Var, var, nullptr, nullptr, nullptr); }
TestPtr t0() { return tnode(TestOp::Zero, -1, nullptr, nullptr, nullptr); }
TestPtr t1() { return tnode(TestOp::One, -1, nullptr, nullptr, nullptr); }
TestPtr tnot(TestPtr p) { return tnode(TestOp::Not, -1, std::move(p), nullptr, nullptr); }
TestPtr join(TestPtr p, TestPtr q) { return tnode(TestOp::Join, -1, std::move(p), std::move(q), nullptr); }
TestPtr meet(TestPtr p, TestPtr q) { return tnode(TestOp::Meet, -1, std::move(p), std::move(q), nullptr); }
TestPtr impl(TestPtr p, TestPtr q) { return tnode(TestOp::Implies, -1, std::move(p), std::move(q), nullptr); }
TestPtr fdia(ElemPtr a, TestPtr p) { return tnode(TestOp::Fdia, -1, std::move(p), nullptr, std::move(a)); }
TestPtr bdia(ElemPtr a, TestPtr p) { return tnode(TestOp::Bdia, -1, std::move(p), nullptr, std::move(a)); }
TestPtr fbox(ElemPtr a, TestPtr p) { return tnode(TestOp::Fbox, -1, std::move(p), nullptr, std::move(a)); }
TestPtr bbox(ElemPtr a, TestPtr p) { return tnode(TestOp::Bbox, -1, std::move(p), nullptr, std::move(a)); }
TestPtr dom(ElemPtr a) { return tnode(TestOp::Dom, -1, nullptr, nullptr, std::move(a)); }
TestPtr cod(ElemPtr a) { return tnode(TestOp::Cod, -1, nullptr, nullptr, std::move(a)); }
TestPtr maxpart(ElemPtr a, TestPtr p) { return tnode(TestOp::MaxPart, -1, std::move(p), nullptr, std::move(a)); }
TestPtr minpart(ElemPtr a, TestPtr p) { return tnode(TestOp::MinPart, -1, std::move(p), nullptr, std::move(a)); }
TestPtr nabla(ElemPtr a) { return tnode(TestOp::Nabla, -1, nullptr, nullptr, std::move(a)); }
TestPtr cvg(ElemPtr a) { return tnode(TestOp::Cvg, -1, nullptr, nullptr, std::move(a)); }
TestPtr mu_dia(ElemPtr a, TestPtr p) { return tnode(TestOp::MuDia, -1, std::move(p), nullptr, std::move(a)); }
TestPtr nu_dia(ElemPtr a, TestPtr p) { return tnode(TestOp::NuDia, -1, std::move(p), nullptr, std::move(a)); }

}  // namespace lx

namespace {

// Precedence climbs: sums bind loosest, products next, postfix iteration
// tightest. Parentheses appear only where re-parsing would go wrong.
enum { kSum = 0, kProd = 1, kTight = 2 };

std::string render_elem(const ElemPtr& e, const std::vector<std::string>& en,
                        const std::vector<std::string>& tn, int ctx);

std::string render_test(const TestPtr& t, const std::vector<std::string>& en,
                        const std::vector<std::string>& tn, int ctx) {
  auto wrap = [&](int prec, std::string s) {
    if (prec < ctx) return "(" + std::move(s) + ")";
    return s;
  };
  switch (t->op) {
    case TestOp::Var: return tn[static_cast<std::size_t>(t->var)];
    case TestOp::Zero: return "0";
    case TestOp::One: return "1";
    case TestOp::Not: return "!" + render_test(t->tlhs, en, tn, kTight);
    case TestOp::Join:
      return wrap(kSum, render_test(t->tlhs, en, tn, kSum) + " + " + render_test(t->trhs, en, tn, kSum));
    case TestOp::Meet:
      return wrap(kProd, render_test(t->tlhs, en, tn, kProd) + " & " + render_test(t->trhs, en, tn, kProd));
    case TestOp::Implies:
      return wrap(kSum, render_test(t->tlhs, en, tn, kProd) + " -> " + render_test(t->trhs, en, tn, kProd));
    case TestOp::Fdia:
      return "<" + render_elem(t->elem, en, tn, kSum) + ">" + render_test(t->tlhs, en, tn, kTight);
    case TestOp::Bdia:
      return "<" + render_elem(t->elem, en, tn, kSum) + "|" + render_test(t->tlhs, en, tn, kTight);
    case TestOp::Fbox:
      return "[" + render_elem(t->elem, en, tn, kSum) + ">" + render_test(t->tlhs, en, tn, kTight);
    case TestOp::Bbox:
      return "|" + render_elem(t->elem, en, tn, kSum) + "]" + render_test(t->tlhs, en, tn, kTight);
    case TestOp::Dom: return "dom(" + render_elem(t->elem, en, tn, kSum) + ")";
    case TestOp::Cod: return "cod(" + render_elem(t->elem, en, tn, kSum) + ")";
    case TestOp::MaxPart:
      return "max[" + render_elem(t->elem, en, tn, kSum) + "](" + render_test(t->tlhs, en, tn, kSum) + ")";
    case TestOp::MinPart:
      return "min[" + render_elem(t->elem, en, tn, kSum) + "](" + render_test(t->tlhs, en, tn, kSum) + ")";
    case TestOp::Nabla: return "nabla(" + render_elem(t->elem, en, tn, kSum) + ")";
    case TestOp::Cvg: return "cvg(" + render_elem(t->elem, en, tn, kSum) + ")";
    case TestOp::MuDia:
      return "mu[" + render_elem(t->elem, en, tn, kSum) + "](" + render_test(t->tlhs, en, tn, kSum) + ")";
    case TestOp::NuDia:
      return "nu[" + render_elem(t->elem, en, tn, kSum) + "](" + render_test(t->tlhs, en, tn, kSum) + ")";
  }
  return "?";
}

std::string render_elem(const ElemPtr& e, const std::vector<std::string>& en,
                        const std::vector<std::string>& tn, int ctx) {
  auto wrap = [&](int prec, std::string s) {
    if (prec < ctx) return "(" + std::move(s) + ")";
    return s;
  };
  switch (e->op) {
    case ElemOp::Var: return en[static_cast<std::size_t>(e->var)];
    case ElemOp::Zero: return "0";
    case ElemOp::One: return "1";
    case ElemOp::Top: return "top";
    case ElemOp::Add:
      return wrap(kSum, render_elem(e->lhs, en, tn, kSum) + " + " + render_elem(e->rhs, en, tn, kSum));
    case ElemOp::Mul:
      return wrap(kProd, render_elem(e->lhs, en, tn, kProd) + ";" + render_elem(e->rhs, en, tn, kProd));
    case ElemOp::Star: return render_elem(e->lhs, en, tn, kTight) + "*";
    case ElemOp::Plus: return render_elem(e->lhs, en, tn, kTight) + "^+";
    case ElemOp::Omega: return render_elem(e->lhs, en, tn, kTight) + "^w";
    case ElemOp::Embed: return "emb(" + render_test(e->test, en, tn, kSum) + ")";
  }
  return "?";
}

}  // namespace

std::string to_string(const ElemPtr& e, const std::vector<std::string>& elem_names,
                      const std::vector<std::string>& test_names) {
  return render_elem(e, elem_names, test_names, kSum);
}

std::string to_string(const TestPtr& t, const std::vector<std::string>& elem_names,
                      const std::vector<std::string>& test_names) {
  return render_test(t, elem_names, test_names, kSum);
}

}  // namespace katd
