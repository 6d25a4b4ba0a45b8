#include "wwp/io.hpp"

#include <fstream>
#include <sstream>

#include "wwp/error.hpp"

namespace wwp {

  nlohmann::json to_json(Word const& w) {
    auto out = nlohmann::json::array();
    for (auto l : w.letters()) {
      out.push_back({l.gen, l.inverse ? -1 : 1});
    }
    return out;
  }

  nlohmann::json to_json(WordTuple const& t) {
    auto out = nlohmann::json::array();
    for (auto const& w : t) {
      out.push_back(to_json(w));
    }
    return out;
  }

  nlohmann::json to_json(TermTuple const& t) {
    return {{"arity", t.arity_in}, {"components", to_json(t.components)}};
  }

  nlohmann::json to_json(Presentation const& p) {
    return {{"generators", p.generators()}, {"relators", to_json(WordTuple(p.relators()))}};
  }

  Word word_from_json(nlohmann::json const& j) {
    if (!j.is_array()) {
      throw ParseError("a word is an array of [index, sign] pairs", 0, 0);
    }
    std::vector<Letter> letters;
    for (auto const& pair : j) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned()
          || !pair[1].is_number_integer() || (pair[1] != 1 && pair[1] != -1)) {
        throw ParseError("bad letter " + pair.dump(), 0, 0);
      }
      letters.push_back(Letter{pair[0].get<std::uint32_t>(), pair[1] == -1});
    }
    return Word(std::move(letters));
  }

  WordTuple word_tuple_from_json(nlohmann::json const& j) {
    if (!j.is_array()) {
      throw ParseError("a word tuple is an array of words", 0, 0);
    }
    WordTuple out;
    for (auto const& w : j) {
      out.push_back(word_from_json(w));
    }
    return out;
  }

  TermTuple term_tuple_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("arity") || !j.contains("components")
        || !j["arity"].is_number_unsigned()) {
      throw ParseError("a term tuple has arity and components", 0, 0);
    }
    return make_term_tuple(j["arity"].get<std::size_t>(), word_tuple_from_json(j["components"]));
  }

  Presentation presentation_from_json(nlohmann::json const& j) {
    if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array()) {
      throw ParseError("a presentation has generators and relators", 0, 0);
    }
    std::vector<std::string> gens;
    for (auto const& g : j["generators"]) {
      if (!g.is_string()) {
        throw ParseError("generator names are strings", 0, 0);
      }
      gens.push_back(g.get<std::string>());
    }
    auto rels = j.contains("relators") ? word_tuple_from_json(j["relators"]) : WordTuple{};
    return Presentation(std::move(gens), std::move(rels));
  }

  namespace {

    nlohmann::json word_entry(Word const& w, Presentation const& p) {
      return {{"text", format_word(w, p.generators())}, {"letters", to_json(w)}};
    }

    nlohmann::json tuple_entry(WordTuple const& t, Presentation const& p) {
      auto out = nlohmann::json::array();
      for (auto const& w : t) {
        out.push_back(word_entry(w, p));
      }
      return out;
    }

  }  // namespace

  nlohmann::json to_json(OrbitVerdict const& v, Presentation const& p) {
    nlohmann::json out{{"decision", to_string(v.decision)}, {"method", v.method}};
    if (v.inverse_images) {
      out["inverse_images"] = tuple_entry(*v.inverse_images, p);
    }
    if (!v.nielsen_log.empty()) {
      auto log = nlohmann::json::array();
      for (auto const& m : v.nielsen_log) {
        log.push_back(format_move(m));
      }
      out["nielsen_log"] = std::move(log);
    }
    if (v.reduced) {
      out["reduced"] = tuple_entry(*v.reduced, p);
    }
    if (v.determinant) {
      out["determinant"] = v.determinant->str();
    }
    if (v.failed_relator) {
      out["failed_relator"] = *v.failed_relator;
    }
    if (v.automorphisms_checked) {
      out["automorphisms_checked"] = *v.automorphisms_checked;
    }
    if (v.violation) {
      out["violation"] = {{"conjunct", v.violation->conjunct},
                          {"terms", format_term_tuple(v.violation->terms)},
                          {"witness", tuple_entry(v.violation->witness, p)},
                          {"witness_position", v.violation->witness_position}};
    }
    if (!v.note.empty()) {
      out["note"] = v.note;
    }
    return out;
  }

  std::string read_text_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw Error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  namespace {

    Presentation load_presentation(std::string const& spec) {
      auto first = spec.find_first_not_of(" \t\r\n");
      if (first != std::string::npos && spec[first] == '<') {
        return parse_presentation(spec);
      }
      if (spec == "s3") {
        return s3_presentation();
      }
      if (spec == "z6") {
        return z6_presentation();
      }
      return parse_presentation(read_text_file(spec));
    }

  }  // namespace

  BackendPtr make_backend(BackendOptions const& o) {
    if (o.kind == "free") {
      if (!o.presentation.empty()) {
        return std::make_shared<FreeGroupBackend>(load_presentation(o.presentation));
      }
      return std::make_shared<FreeGroupBackend>(o.rank);
    }
    if (o.kind == "abelian") {
      return std::make_shared<FreeAbelianBackend>(o.rank);
    }
    if (o.kind == "dihedral") {
      return std::make_shared<DihedralBackend>();
    }
    if (o.presentation.empty()) {
      throw Error("backend " + o.kind + " needs --presentation");
    }
    auto p = load_presentation(o.presentation);
    if (o.kind == "coset") {
      return std::make_shared<CosetTableBackend>(std::move(p), o.coset_cap);
    }
    if (o.kind == "rewrite") {
      if (o.rules_file.empty()) {
        return make_rewriting_backend(std::move(p), o.kb_cap, o.hopfian);
      }
      auto rules = parse_rules(read_text_file(o.rules_file), p.generators());
      // Certified only when confluent and every relator reduces to 1. That
      // each rule holds in the group is the caller's claim.
      bool ok = is_locally_confluent(rules);
      for (auto const& r : p.relators()) {
        ok = ok && rules.reduce(r).empty();
      }
      rules.confluence_certified = ok;
      return std::make_shared<RewritingBackend>(std::move(p), std::move(rules), o.hopfian);
    }
    throw Error("unknown backend '" + o.kind + "'");
  }

}  // namespace wwp
