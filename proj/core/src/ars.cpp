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
#include "katd/ars.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace katd {

int ArsSystem::state_index(const std::string& name) const {
  for (std::size_t i = 0; i < states.size(); ++i)
    if (states[i] == name) return static_cast<int>(i);
  return -1;
}

const FiniteRelation* ArsSystem::relation(const std::string& name) const {
  for (const auto& [n, r] : relations)
    if (n == name) return &r;
  return nullptr;
}

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

// State names are freer than relation names: any whitespace-free token
// without the grammar's structural characters, so numeric states like "1"
// work as-is.
bool valid_state_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ':' || c == '#' || c == '>') return false;
  return s != "->";
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

FiniteRelation& relation_slot(ArsSystem& sys, const std::string& name) {
  for (auto& [n, r] : sys.relations)
    if (n == name) return r;
  sys.relations.emplace_back(name, FiniteRelation(sys.state_count()));
  return sys.relations.back().second;
}

}  // namespace

ArsSystem parse_ars(const std::string& text) {
  ArsSystem sys;
  bool have_states = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = strip(line);
    if (line.empty()) continue;

    std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError(lineno, "expected 'name:' declaration, got '" + line + "'");
    std::string head = strip(line.substr(0, colon));
    std::string rest = strip(line.substr(colon + 1));

    if (head == "states") {
      if (have_states) throw ParseError(lineno, "duplicate states declaration");
      std::vector<std::string> names = split_ws(rest);
      if (names.empty()) throw ParseError(lineno, "states declaration names no states");
      if (names.size() > 64) throw ParseError(lineno, "more than 64 states");
      for (const std::string& n : names) {
        if (!valid_state_name(n)) throw ParseError(lineno, "invalid state name '" + n + "'");
        if (sys.state_index(n) >= 0) throw ParseError(lineno, "duplicate state '" + n + "'");
        sys.states.push_back(n);
      }
      have_states = true;
      continue;
    }

    if (!have_states)
      throw ParseError(lineno, "states must be declared before relation '" + head + "'");
    if (!valid_name(head)) throw ParseError(lineno, "invalid relation name '" + head + "'");

    FiniteRelation& rel = relation_slot(sys, head);
    if (rest.empty()) continue;  // bare declaration: the empty relation

    std::size_t arrow = rest.find("->");
    if (arrow == std::string::npos)
      throw ParseError(lineno, "expected 'SRC -> DST' after '" + head + ":'");
    std::string src = strip(rest.substr(0, arrow));
    std::string dst = strip(rest.substr(arrow + 2));
    int si = sys.state_index(src);
    if (si < 0) throw ParseError(lineno, "unknown state '" + src + "'");
    int di = sys.state_index(dst);
    if (di < 0) throw ParseError(lineno, "unknown state '" + dst + "'");
    rel.add_edge(si, di);
  }

  if (!have_states) throw ParseError(lineno == 0 ? 1 : lineno, "missing states declaration");
  return sys;
}

ArsSystem parse_ars_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_ars(buf.str());
}

}  // namespace katd
