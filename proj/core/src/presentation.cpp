#include "cellar/presentation.hpp"

#include <json.hpp>

namespace cellar {

namespace {

using nlohmann::ordered_json;

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

Scalar Presentation::coeff_value(const std::string& text) const {
  std::string t = strip(text);
  if (t.empty()) throw InputError("empty coefficient");
  bool neg = false;
  if (t[0] == '-') {
    neg = true;
    t = strip(t.substr(1));
  }
  Scalar rat = Scalar::one(field);
  std::string sym = t;
  size_t star = t.find('*');
  if (star != std::string::npos) {
    rat = Scalar::from_string(field, strip(t.substr(0, star)));
    sym = strip(t.substr(star + 1));
  }
  if (!sym.empty() && (std::isdigit(static_cast<unsigned char>(sym[0])) || sym[0] == '+')) {
    // plain numeric literal
    Scalar v = Scalar::from_string(field, sym);
    if (star != std::string::npos) throw InputError("bad coefficient '" + text + "'");
    return neg ? -v : v;
  }
  const Param* found = nullptr;
  for (const auto& p : params)
    if (p.name == sym) found = &p;
  if (!found) throw InputError("unknown parameter '" + sym + "'");
  Scalar v = rat * Scalar::from_string(field, found->value);
  return neg ? -v : v;
}

Element Presentation::instantiate(const ExprSpec& spec, bool allow_vertices) const {
  Element e(field);
  for (const auto& term : spec) {
    Scalar c = coeff_value(term.coeff);
    if (term.is_vertex) {
      if (!allow_vertices)
        throw InputError("relation term may not be a vertex idempotent");
      e.add(Word::vertex(quiver.require_vertex(term.vertex)), c);
    } else {
      e.add(word_from_names(quiver, term.path), c);
    }
  }
  return e;
}

void finalize_presentation(Presentation& p) {
  if (!p.field.rational() && !is_odd_prime(p.field.p))
    throw InputError("field must be the rationals or F_p with p an odd prime");
  for (const auto& prm : p.params) {
    Scalar v = Scalar::from_string(p.field, prm.value);
    for (const auto& f : prm.forbidden)
      if (v == Scalar::from_string(p.field, f))
        throw InputError("parameter '" + prm.name + "' takes forbidden value " + prm.value);
  }
  p.relations.clear();
  for (const auto& spec : p.relation_specs) {
    Element e = p.instantiate(spec, /*allow_vertices=*/false);
    if (!e.zero()) p.relations.push_back(std::move(e));
  }
}

Presentation parse_presentation(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& ex) {
    throw InputError(std::string("presentation JSON parse error: ") + ex.what());
  }
  Presentation p;
  try {
    const auto& jf = j.at("field");
    if (jf.is_string()) {
      if (jf.get<std::string>() != "rational")
        throw InputError("field must be \"rational\" or {\"prime\": p}");
      p.field = Field{0};
    } else {
      p.field = Field{jf.at("prime").get<std::uint32_t>()};
    }
    if (j.contains("params")) {
      for (const auto& jp : j.at("params")) {
        Param prm;
        prm.name = jp.at("name").get<std::string>();
        prm.value = jp.at("value").get<std::string>();
        if (jp.contains("forbidden"))
          for (const auto& f : jp.at("forbidden")) prm.forbidden.push_back(f.get<std::string>());
        p.params.push_back(std::move(prm));
      }
    }
    for (const auto& jv : j.at("vertices")) p.quiver.add_vertex(jv.get<std::string>());
    for (const auto& ja : j.at("arrows"))
      p.quiver.add_arrow(ja.at("name").get<std::string>(), ja.at("from").get<std::string>(),
                         ja.at("to").get<std::string>());
    for (const auto& jr : j.at("relations")) {
      ExprSpec spec;
      for (const auto& jt : jr) {
        TermSpec t;
        if (jt.contains("coeff")) t.coeff = jt.at("coeff").get<std::string>();
        if (jt.contains("vertex")) {
          t.is_vertex = true;
          t.vertex = jt.at("vertex").get<std::string>();
        } else {
          for (const auto& a : jt.at("path")) t.path.push_back(a.get<std::string>());
        }
        spec.push_back(std::move(t));
      }
      p.relation_specs.push_back(std::move(spec));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& ex) {
    throw InputError(std::string("malformed presentation: ") + ex.what());
  }
  finalize_presentation(p);
  return p;
}

namespace {

ordered_json expr_to_json(const ExprSpec& spec) {
  ordered_json jr = ordered_json::array();
  for (const auto& t : spec) {
    ordered_json jt;
    jt["coeff"] = t.coeff;
    if (t.is_vertex)
      jt["vertex"] = t.vertex;
    else
      jt["path"] = t.path;
    jr.push_back(std::move(jt));
  }
  return jr;
}

}  // namespace

ExprSpec parse_expr_dsl(const std::string& text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) tokens.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) tokens.push_back(cur);

  ExprSpec spec;
  TermSpec term;
  bool neg = false;
  bool in_term = false;
  auto flush = [&]() {
    if (!in_term) return;
    if (!term.is_vertex && term.path.empty()) throw InputError("empty term in '" + text + "'");
    spec.push_back(term);
    term = TermSpec{};
    in_term = false;
  };
  for (const auto& tok : tokens) {
    if (tok == "+" || tok == "-") {
      flush();
      neg = tok == "-";
      continue;
    }
    if (!in_term) {
      in_term = true;
      term.coeff = neg ? "-1" : "1";
      size_t star = tok.find('*');
      if (star != std::string::npos) {
        term.coeff = (neg ? "-" : "") + tok.substr(0, star);
        std::string first = tok.substr(star + 1);
        if (first.rfind("e(", 0) == 0 && first.back() == ')') {
          term.is_vertex = true;
          term.vertex = first.substr(2, first.size() - 3);
        } else {
          term.path.push_back(first);
        }
        continue;
      }
    }
    if (tok.rfind("e(", 0) == 0 && tok.back() == ')') {
      term.is_vertex = true;
      term.vertex = tok.substr(2, tok.size() - 3);
    } else {
      term.path.push_back(tok);
    }
  }
  flush();
  if (spec.empty()) throw InputError("empty expression '" + text + "'");
  return spec;
}

std::string serialize_presentation(const Presentation& p) {
  ordered_json j;
  if (p.field.rational())
    j["field"] = "rational";
  else
    j["field"] = ordered_json{{"prime", p.field.p}};
  j["params"] = ordered_json::array();
  for (const auto& prm : p.params) {
    ordered_json jp;
    jp["name"] = prm.name;
    jp["value"] = prm.value;
    jp["forbidden"] = prm.forbidden;
    j["params"].push_back(std::move(jp));
  }
  j["vertices"] = p.quiver.vertices();
  j["arrows"] = ordered_json::array();
  for (const auto& a : p.quiver.arrows()) {
    ordered_json ja;
    ja["name"] = a.name;
    ja["from"] = p.quiver.vertex_name(a.src);
    ja["to"] = p.quiver.vertex_name(a.tgt);
    j["arrows"].push_back(std::move(ja));
  }
  j["relations"] = ordered_json::array();
  for (const auto& spec : p.relation_specs) j["relations"].push_back(expr_to_json(spec));
  return j.dump(2) + "\n";
}

}  // namespace cellar
