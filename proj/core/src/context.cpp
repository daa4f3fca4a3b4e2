#include "motivic/context.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include <json.hpp>

#include "motivic/checked.hpp"
#include "motivic/error.hpp"

namespace motivic
{

using nlohmann::json;

std::vector<std::string> default_labels(PermGroup const &group)
{
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < group.class_count(); ++i)
    labels.push_back("H" + std::to_string(i));
  labels.front() = "K";
  labels.back() = "F";
  return labels;
}

GaloisContext::GaloisContext(GroupPtr group, std::vector<std::string> labels, AxiomFlag a1, AxiomFlag a2)
: _group(std::move(group)), _labels(std::move(labels)), _a1(std::move(a1)), _a2(std::move(a2))
{}

ContextPtr GaloisContext::make(GroupPtr group, std::vector<std::string> labels, AxiomFlag a1, AxiomFlag a2)
{
  if (labels.size() != group->class_count())
    throw Error(Errc::InvalidInput, "expected " + std::to_string(group->class_count()) + " field labels, got " +
                                      std::to_string(labels.size()));
  std::set<std::string> seen;
  for (auto const &l : labels) {
    if (l.empty() || !seen.insert(l).second)
      throw Error(Errc::InvalidInput, "field labels must be nonempty and distinct");
    if (std::any_of(l.begin(), l.end(), [](char c) { return c == '[' || c == ']'; }))
      throw Error(Errc::InvalidInput, "field label '" + l + "' contains a bracket");
  }
  return ContextPtr(new GaloisContext(std::move(group), std::move(labels), std::move(a1), std::move(a2)));
}

namespace
{

AxiomFlag default_a1()
{
  return {true, "assumed for F finitely generated over Q: an Artin-coefficient polynomial in L that a monic "
                "factor annihilates is zero"};
}

AxiomFlag default_a2()
{
  return {true, "assumed for F finitely generated over Q: distinct finite extensions of F give independent "
                "classes in K0(Var_F)"};
}

} // namespace

ContextPtr GaloisContext::biquadratic()
{
  static ContextPtr const ctx = [] {
    auto g = PermGroup::generate(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, {"s1", "s2"});
    return make(g, {"K", "E1", "E2", "E12", "F"}, default_a1(), default_a2());
  }();
  return ctx;
}

ContextPtr GaloisContext::quadratic()
{
  static ContextPtr const ctx = [] {
    auto g = PermGroup::generate(2, {{1, 0}}, {"s"});
    return make(g, {"E", "F"}, default_a1(), default_a2());
  }();
  return ctx;
}

int GaloisContext::class_of_label(std::string const &name) const
{
  for (std::size_t i = 0; i < _labels.size(); ++i)
    if (_labels[i] == name)
      return static_cast<int>(i);
  throw Error(Errc::UnknownSubgroup, "no field labelled '" + name + "'");
}

std::string GaloisContext::format(BurnsideElement const &a) const
{
  if (a.is_zero())
    return "0";
  std::string out;
  int unit = _group->full_class();
  auto emit = [&out](std::int64_t c, std::string const &body) {
    bool neg = c < 0;
    std::int64_t mag = neg ? -c : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    if (body.empty())
      out += std::to_string(mag);
    else if (mag == 1)
      out += body;
    else
      out += std::to_string(mag) + "*" + body;
  };
  if (auto c = a.coefficient(unit); c != 0)
    emit(c, "");
  for (auto const &[cls, c] : a.terms())
    if (cls != unit)
      emit(c, "[" + label(cls) + "]");
  return out;
}

namespace
{

class Cursor
{
public:
  explicit Cursor(std::string const &text) : _t(text) {}

  void skip()
  {
    while (_p < _t.size() && std::isspace(static_cast<unsigned char>(_t[_p])))
      ++_p;
  }
  bool done()
  {
    skip();
    return _p >= _t.size();
  }
  char peek()
  {
    skip();
    return _p < _t.size() ? _t[_p] : '\0';
  }
  bool accept(char c)
  {
    if (peek() != c)
      return false;
    ++_p;
    return true;
  }
  bool accept_word(std::string const &w)
  {
    skip();
    if (_t.compare(_p, w.size(), w) != 0)
      return false;
    _p += w.size();
    return true;
  }
  std::optional<std::int64_t> integer()
  {
    skip();
    std::size_t start = _p;
    std::int64_t v = 0;
    while (_p < _t.size() && std::isdigit(static_cast<unsigned char>(_t[_p])))
      v = checked_add(checked_mul(v, 10), _t[_p++] - '0');
    if (_p == start)
      return std::nullopt;
    return v;
  }
  std::string until(char stop)
  {
    std::size_t start = _p;
    while (_p < _t.size() && _t[_p] != stop)
      ++_p;
    return _t.substr(start, _p - start);
  }
  std::string identifier()
  {
    skip();
    std::size_t start = _p;
    while (_p < _t.size() && (std::isalnum(static_cast<unsigned char>(_t[_p])) || _t[_p] == '_'))
      ++_p;
    return _t.substr(start, _p - start);
  }
  [[noreturn]] void fail(std::string const &what) const
  {
    throw Error(Errc::InvalidInput, what + " at offset " + std::to_string(_p) + " in '" + _t + "'");
  }

private:
  std::string const &_t;
  std::size_t _p = 0;
};

std::string json_location(std::string const &text, std::size_t byte)
{
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    }
    else
      ++col;
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string const &text)
{
  try {
    return json::parse(text);
  }
  catch (json::parse_error const &e) {
    throw Error(Errc::InvalidInput, "malformed JSON at " + json_location(text, e.byte) + ": " + e.what());
  }
}

int element_from_word(PermGroup const &g, std::string const &word)
{
  int e = 0;
  std::size_t start = 0;
  while (start <= word.size()) {
    auto stop = word.find('*', start);
    std::string name = word.substr(start, stop == std::string::npos ? std::string::npos : stop - start);
    if (name != "1" && name != "e") {
      int j = g.generator_by_name(name);
      if (j < 0)
        throw Error(Errc::InvalidInput, "unknown generator '" + name + "'");
      e = g.multiply(e, g.generator_element(static_cast<std::size_t>(j)));
    }
    if (stop == std::string::npos)
      break;
    start = stop + 1;
  }
  return e;
}

ElementMask subgroup_from_json(PermGroup const &g, json const &words)
{
  if (!words.is_array())
    throw Error(Errc::InvalidInput, "stabilizer must be a list of generator words");
  ElementMask gens = 1;
  for (auto const &w : words) {
    if (!w.is_string())
      throw Error(Errc::InvalidInput, "stabilizer entries must be strings");
    gens |= ElementMask{1} << element_from_word(g, w.get<std::string>());
  }
  return g.closure(gens);
}

} // namespace

BurnsideElement GaloisContext::parse_element(std::string const &text) const
{
  Cursor c(text);
  BurnsideElement out(_group);
  bool first = true;
  if (c.done())
    c.fail("empty Burnside element");
  while (!c.done()) {
    std::int64_t sign = 1;
    if (c.accept('+'))
      sign = 1;
    else if (c.accept('-'))
      sign = -1;
    else if (!first)
      c.fail("expected '+' or '-'");
    first = false;

    std::int64_t coeff = 1;
    bool have_number = false;
    if (auto n = c.integer()) {
      coeff = *n;
      have_number = true;
      if (!c.accept('*')) {
        out += BurnsideElement::integer(_group, sign * coeff);
        continue;
      }
    }
    if (!c.accept('['))
      c.fail(have_number ? "expected '[' after '*'" : "expected a number or '[label]'");
    std::string name = c.until(']');
    if (!c.accept(']'))
      c.fail("unterminated label");
    int cls;
    try {
      cls = class_of_label(name);
    }
    catch (Error const &) {
      c.fail("unknown field label '" + name + "'");
    }
    out += BurnsideElement::basis(_group, cls, checked_mul(sign, coeff));
  }
  return out;
}

GSet GaloisContext::parse_gset(std::string const &text) const
{
  Cursor c(text);
  std::optional<GSet> out;
  if (c.done())
    c.fail("empty G-set spec");
  do {
    std::int64_t mult = 1;
    if (auto n = c.integer()) {
      mult = *n;
      if (!c.accept('*'))
        c.fail("expected '*' after multiplier");
    }
    std::optional<GSet> piece;
    std::string kind = c.identifier();
    if (kind == "regular")
      piece = GSet::regular(_group);
    else if (kind == "point")
      piece = GSet::points(_group, 1);
    else if (kind == "split" || kind == "points") {
      if (!c.accept(':'))
        c.fail("expected ':'");
      auto n = c.integer();
      if (!n || *n > 64)
        c.fail("expected a point count up to 64");
      piece = GSet::points(_group, static_cast<int>(*n));
    }
    else if (kind == "coset") {
      if (!c.accept(':'))
        c.fail("expected ':'");
      std::string name = c.identifier();
      int cls;
      try {
        cls = class_of_label(name);
      }
      catch (Error const &) {
        c.fail("unknown field label '" + name + "'");
      }
      piece = GSet::cosets(_group, _group->subgroup_classes()[static_cast<std::size_t>(cls)].representative);
    }
    else
      c.fail("unknown G-set piece '" + kind + "'");
    if (mult > 64)
      c.fail("multiplier too large");
    for (std::int64_t i = 0; i < mult; ++i)
      out = out ? out->disjoint_union(*piece) : *piece;
    if (!out)
      out = GSet::points(_group, 0);
  } while (c.accept('+'));
  if (!c.done())
    c.fail("trailing input");
  return *out;
}

GSet GaloisContext::gset_from_json(std::string const &text) const
{
  json j = parse_json(text);
  if (j.contains("gset"))
    j = j["gset"];
  if (j.contains("action")) {
    auto const &a = j["action"];
    if (!a.is_array() || a.size() != _group->generator_count())
      throw Error(Errc::InvalidInput, "action needs one image array per generator");
    std::vector<Perm> perms;
    for (auto const &p : a)
      perms.push_back(p.get<Perm>());
    int n = perms.empty() ? 0 : static_cast<int>(perms.front().size());
    return GSet::from_action(_group, n, std::move(perms));
  }
  if (!j.contains("transitive") || !j["transitive"].is_array())
    throw Error(Errc::InvalidInput, "G-set JSON needs 'transitive' or 'action'");
  std::optional<GSet> out;
  for (auto const &piece : j["transitive"]) {
    if (!piece.contains("stabilizer"))
      throw Error(Errc::InvalidInput, "transitive piece without 'stabilizer'");
    GSet s = GSet::cosets(_group, subgroup_from_json(*_group, piece["stabilizer"]));
    out = out ? out->disjoint_union(s) : s;
  }
  return out ? *out : GSet::points(_group, 0);
}

GaloisLattice GaloisContext::parse_lattice(std::string const &text) const
{
  auto colon = text.find(':');
  std::string kind = text.substr(0, colon);
  if (colon != std::string::npos && (kind == "perm" || kind == "aug" || kind == "quot")) {
    GSet s = parse_gset(text.substr(colon + 1));
    if (kind == "perm")
      return GaloisLattice::permutation(s, "Z[" + text.substr(colon + 1) + "]");
    if (s.size() < 1)
      throw Error(Errc::InvalidInput, "empty G-set in '" + text + "'");
    if (kind == "aug")
      return GaloisLattice::augmentation_kernel(s, text);
    return GaloisLattice::norm_quotient(s, text);
  }
  json j = parse_json(text);
  try {
    auto const &a = j.at("action");
    if (!a.is_array() || a.size() != _group->generator_count())
      throw Error(Errc::InvalidInput, "lattice action needs one matrix per generator");
    std::vector<IntMatrix> mats;
    for (auto const &m : a) {
      auto rows = m.get<std::vector<std::vector<std::int64_t>>>();
      IntMatrix x(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size())
          throw Error(Errc::InvalidInput, "lattice action matrices must be square");
        for (std::size_t k = 0; k < rows.size(); ++k)
          x(i, k) = rows[i][k];
      }
      mats.push_back(std::move(x));
    }
    return GaloisLattice::make(_group, j.value("name", std::string("X")), std::move(mats));
  }
  catch (json::exception const &e) {
    throw Error(Errc::InvalidInput, std::string("lattice: ") + e.what());
  }
}

ContextPtr GaloisContext::from_json(std::string const &text)
{
  json j = parse_json(text);
  try {
    auto const &g = j.at("group");
    int degree = g.at("degree").get<int>();
    auto gens = g.at("generators").get<std::vector<Perm>>();
    std::vector<std::string> names;
    if (g.contains("names"))
      names = g["names"].get<std::vector<std::string>>();
    for (auto const &p : gens)
      if (!is_permutation(p, degree))
        throw Error(Errc::InvalidAction, "generator is not a permutation of degree " + std::to_string(degree));
    GroupPtr group = PermGroup::generate(degree, std::move(gens), std::move(names));

    auto labels = default_labels(*group);
    if (j.contains("labels")) {
      for (auto const &entry : j["labels"]) {
        ElementMask h = subgroup_from_json(*group, entry.at("stabilizer"));
        labels[static_cast<std::size_t>(group->class_of(h))] = entry.at("name").get<std::string>();
      }
    }
    AxiomFlag a1 = default_a1(), a2 = default_a2();
    if (j.contains("axioms")) {
      auto const &ax = j["axioms"];
      if (ax.contains("A1")) {
        a1.enabled = ax["A1"].get<bool>();
        if (!a1.enabled)
          a1.provenance = "disabled by context file";
      }
      if (ax.contains("A2")) {
        a2.enabled = ax["A2"].get<bool>();
        if (!a2.enabled)
          a2.provenance = "disabled by context file";
      }
    }
    return make(group, std::move(labels), std::move(a1), std::move(a2));
  }
  catch (json::exception const &e) {
    throw Error(Errc::InvalidInput, std::string("context: ") + e.what());
  }
}

} // namespace motivic
