// Command-line front end. Exit codes: 0 success, 1 negative verdict,
// 2 usage or input error, 3 resource limit.

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qf/qf.hpp"

namespace {

  using qf::io::json;

  constexpr int exit_ok       = 0;
  constexpr int exit_negative = 1;
  constexpr int exit_usage    = 2;
  constexpr int exit_limit    = 3;

  struct Output {
    std::string file;
    std::string format = "json";

    void add(CLI::App* app) {
      app->add_option("--out", file, "write the result to FILE instead of stdout");
      app->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
    }

    void emit(std::string const& text) const {
      if (file.empty()) {
        std::cout << text;
      } else {
        qf::io::write_text_file(file, text);
      }
    }

    void emit(qf::FiniteQuandle const& Q, json const& j) const {
      emit(format == "table" ? qf::io::render_table(Q) : qf::io::pretty(j));
    }
  };

  void print(json const& j) {
    std::cout << qf::io::pretty(j);
  }

  std::vector<std::size_t> parse_index_list(std::string const& s) {
    std::vector<std::size_t> out;
    std::stringstream        ss(s);
    std::string              item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) {
        continue;
      }
      std::size_t pos = 0;
      std::size_t v   = 0;
      try {
        v = std::stoul(item, &pos);
      } catch (std::exception const&) {
        pos = 0;
      }
      if (pos != item.size() || item[0] == '-') {
        throw qf::invalid_argument("bad index '" + item + "' in list '" + s + "'");
      }
      out.push_back(v);
    }
    return out;
  }

  std::vector<qf::Permutation> parse_perm_list(json const& j, char const* key) {
    if (!j.contains(key)) {
      throw qf::io::format_error(std::string("maps file needs '") + key + "'");
    }
    std::vector<qf::Permutation> out;
    try {
      for (auto const& p : j.at(key)) {
        out.emplace_back(p.get<std::vector<std::size_t>>());
      }
    } catch (json::exception const&) {
      throw qf::io::format_error(std::string("'") + key + "' must be a list of permutations");
    }
    return out;
  }

  json abelianization_json(qf::Abelianization const& a) {
    json j;
    j["free_rank"] = a.free_rank;
    json t         = json::array();
    for (auto const& d : a.torsion) {
      t.push_back(d.str());
    }
    j["torsion"]  = t;
    j["describe"] = a.describe();
    return j;
  }

  std::vector<qf::FiniteGroup> parse_catalog(std::string const& spec) {
    if (spec.empty() || spec == "default") {
      return qf::default_catalog();
    }
    std::vector<qf::FiniteGroup> out;
    std::stringstream            ss(spec);
    std::string                  item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) {
        out.push_back(qf::io::load_group(item));
      }
    }
    return out;
  }

  std::string generator_name(std::size_t i, std::size_t n) {
    static char const* const letters[] = {"x", "y", "z", "w"};
    return n <= 4 ? letters[i] : "g" + std::to_string(i);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite quandles, (G,A)-quandles and enveloping groups"};
  app.require_subcommand(1);
  int code = exit_ok;

  // make
  auto*       make = app.add_subcommand("make", "build a quandle");
  Output      make_out;
  make->require_subcommand(1);
  std::size_t mk_n = 0, mk_m = 0;
  std::string mk_arg, mk_q2, mk_maps;
  auto*       mk_trivial  = make->add_subcommand("trivial", "trivial quandle T_n");
  auto*       mk_dihedral = make->add_subcommand("dihedral", "dihedral quandle R_n");
  auto*       mk_takasaki = make->add_subcommand("takasaki", "Takasaki quandle of an abelian group");
  auto*       mk_conj     = make->add_subcommand("conj", "Conj(G): x*y = y^-1 x y");
  auto*       mk_conjinv  = make->add_subcommand("conj-inv", "Conj_-1(G): x*y = y x y^-1");
  auto*       mk_core     = make->add_subcommand("core", "Core(G): x*y = y x^-1 y");
  auto*       mk_u        = make->add_subcommand("u", "U(n,m)");
  auto*       mk_union    = make->add_subcommand("union", "union of two quandles");
  for (auto* s : {mk_trivial, mk_dihedral, mk_takasaki, mk_conj, mk_conjinv, mk_core, mk_u, mk_union}) {
    make_out.add(s);
  }
  mk_trivial->add_option("n", mk_n)->required();
  mk_dihedral->add_option("n", mk_n)->required();
  for (auto* s : {mk_takasaki, mk_conj, mk_conjinv, mk_core}) {
    s->add_option("group", mk_arg, "group file or spec such as S3xZ4")->required();
  }
  mk_u->add_option("n", mk_n)->required();
  mk_u->add_option("m", mk_m)->required();
  mk_union->add_option("q1", mk_arg)->required();
  mk_union->add_option("q2", mk_q2)->required();
  mk_union->add_option("--maps", mk_maps, "JSON file with \"sigma\" and \"tau\" permutation lists")->required();

  // check
  auto*       check = app.add_subcommand("check", "check axioms, predicates or normality");
  check->require_subcommand(1);
  std::string ck_file, ck_subset;
  auto*       ck_axioms = check->add_subcommand("axioms", "check the quandle axioms");
  auto*       ck_pred   = check->add_subcommand("predicates", "structural predicates");
  auto*       ck_normal = check->add_subcommand("normal", "is a subset a normal subquandle");
  for (auto* s : {ck_axioms, ck_pred, ck_normal}) {
    s->add_option("file", ck_file)->required();
  }
  ck_normal->add_option("--subset", ck_subset, "comma-separated element indices")->required();

  // orbits, inn, iso, homs
  std::string f1, f2;
  auto*       orb = app.add_subcommand("orbits", "orbits of the inner automorphism group");
  orb->add_option("file", f1)->required();
  auto* inn = app.add_subcommand("inn", "inner automorphism group");
  inn->add_option("file", f1)->required();
  auto* iso = app.add_subcommand("iso", "isomorphism test with witness");
  iso->add_option("a", f1)->required();
  iso->add_option("b", f2)->required();
  auto* homs = app.add_subcommand("homs", "all homomorphisms");
  homs->add_option("a", f1)->required();
  homs->add_option("b", f2)->required();

  // ga
  auto*       ga = app.add_subcommand("ga", "the (G,A)-quandle Q(G,A)");
  std::string ga_group, ga_elems;
  bool        ga_compare = false;
  Output      ga_out;
  ga_out.add(ga);
  ga->add_option("--group", ga_group, "group file or spec")->required();
  ga->add_option("--elems", ga_elems, "comma-separated element indices of A")->required();
  ga->add_flag("--compare-conj", ga_compare, "compare with the class-union subquandle of Conj(G)");

  // envelope
  auto*       env = app.add_subcommand("envelope", "enveloping group tools");
  env->require_subcommand(1);
  std::string ev_file, ev_catalog = "default", ev_cert;
  std::size_t ev_n = 0, ev_m = 0;
  Output      ev_out;
  auto*       ev_present = env->add_subcommand("present", "presentation of the enveloping group");
  auto*       ev_abel    = env->add_subcommand("abelianize", "abelianization of the enveloping group");
  auto*       ev_certify = env->add_subcommand("certify", "search an injectivity certificate");
  auto*       ev_recon   = env->add_subcommand("reconstruct", "compare Q with Q(G, f(A)) for a certificate");
  auto*       ev_u       = env->add_subcommand("verify-u", "check the U(n,m) reduction in the finite model");
  auto*       ev_r2n     = env->add_subcommand("verify-r2n", "check the R_2n presentation in the dihedral group");
  for (auto* s : {ev_present, ev_abel, ev_certify, ev_recon}) {
    s->add_option("file", ev_file)->required();
  }
  ev_certify->add_option("--catalog", ev_catalog, "comma-separated group specs or files, or 'default'");
  ev_out.add(ev_certify);
  ev_recon->add_option("--cert", ev_cert, "certificate file")->required();
  ev_u->add_option("n", ev_n)->required();
  ev_u->add_option("m", ev_m)->required();
  ev_r2n->add_option("n", ev_n)->required();

  // free
  auto*       fr = app.add_subcommand("free", "free quandles and presentations");
  fr->require_subcommand(1);
  std::size_t fr_n = 0, fr_depth = 1;
  std::string fr_p1, fr_p2;
  bool        fr_envelope = false;
  auto*       fr_fq       = fr->add_subcommand("fq", "elements of the free quandle FQ_n");
  auto*       fr_prod     = fr->add_subcommand("product", "free product of two presentations");
  auto*       fr_closure  = fr->add_subcommand("closure", "bounded word-equality estimate for a presentation");
  fr_fq->add_option("n", fr_n)->required();
  fr_fq->add_option("--depth", fr_depth, "maximum word length");
  fr_prod->add_option("p1", fr_p1)->required();
  fr_prod->add_option("p2", fr_p2)->required();
  fr_prod->add_flag("--envelope", fr_envelope, "print the enveloping group presentation instead");
  fr_closure->add_option("file", fr_p1)->required();
  fr_closure->add_option("--depth", fr_depth, "maximum left-normed word length (<= 4)");

  // classify, abenvel-scan
  auto*                      cls = app.add_subcommand("classify", "quandles of a given order up to isomorphism");
  std::size_t                cl_order = 0;
  std::optional<std::size_t> cl_orbits;
  bool                       cl_connected = false;
  cls->add_option("--order", cl_order)->required();
  cls->add_option("--orbits", cl_orbits, "keep quandles with this many orbits");
  cls->add_flag("--connected", cl_connected, "keep connected quandles");
  auto*       scan = app.add_subcommand("abenvel-scan", "scan 2-orbit quandles for enveloping group Z^2");
  std::size_t sc_max = 0;
  std::string sc_format = "json";
  scan->add_option("--max-order", sc_max)->required();
  scan->add_option("--format", sc_format)->check(CLI::IsMember({"json", "table"}));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int r = app.exit(e);
    return r == 0 ? exit_ok : exit_usage;
  }

  try {
    ////////////////////////////////////////////////////////////////////
    if (make->parsed()) {
      qf::FiniteQuandle Q;
      if (mk_trivial->parsed()) {
        Q = qf::trivial_quandle(mk_n);
      } else if (mk_dihedral->parsed()) {
        Q = qf::dihedral_quandle(mk_n);
      } else if (mk_takasaki->parsed()) {
        Q = qf::takasaki(qf::io::load_group(mk_arg));
      } else if (mk_conj->parsed()) {
        Q = qf::conj(qf::io::load_group(mk_arg));
      } else if (mk_conjinv->parsed()) {
        Q = qf::conj_inv(qf::io::load_group(mk_arg));
      } else if (mk_core->parsed()) {
        Q = qf::core(qf::io::load_group(mk_arg));
      } else if (mk_u->parsed()) {
        Q = qf::u_quandle(mk_n, mk_m);
      } else {
        auto const maps = qf::io::read_json_file(mk_maps);
        try {
          Q = qf::quandle_union(qf::io::load_quandle(mk_arg), qf::io::load_quandle(mk_q2),
                                parse_perm_list(maps, "sigma"), parse_perm_list(maps, "tau"));
        } catch (qf::union_condition_violated const& e) {
          std::cerr << e.what() << "\n";
          return exit_negative;
        }
      }
      make_out.emit(Q, qf::io::to_json(Q));
    }
    ////////////////////////////////////////////////////////////////////
    else if (check->parsed()) {
      if (ck_axioms->parsed()) {
        auto const t = qf::io::table_from_json(qf::io::read_json_file(ck_file));
        if (auto bad = qf::check_axioms(t)) {
          json j;
          j["ok"]      = false;
          j["axiom"]   = qf::axiom_name(bad->axiom);
          j["witness"] = bad->witness;
          j["message"] = bad->describe();
          print(j);
          code = exit_negative;
        } else {
          print(json{{"ok", true}, {"order", t.size()}});
        }
      } else {
        auto const Q = qf::io::load_quandle(ck_file);
        if (ck_pred->parsed()) {
          auto const p = qf::predicates(Q);
          json       j;
          j["order"]              = Q.order();
          j["commutative"]        = p.is_commutative;
          j["latin"]              = p.is_latin;
          j["trivial"]            = p.is_trivial;
          j["connected"]          = qf::is_connected(Q);
          j["ga_obstruction_pass"] = p.ga_obstruction_pass;
          if (auto w = qf::ga_obstruction_witness(Q)) {
            j["ga_obstruction_witness"] = json::array({w->first, w->second});
          }
          j["inner_map_injective"] = qf::inner_map_injective(Q);
          if (Q.order() <= qf::max_congruence_order) {
            j["simple"] = qf::is_simple(Q);
          }
          print(j);
        } else {
          auto const subset = parse_index_list(ck_subset);
          bool const sub    = qf::is_subquandle(Q, subset);
          bool const normal = sub && qf::is_normal_subquandle(Q, subset);
          print(json{{"subquandle", sub}, {"normal", normal}});
          code = normal ? exit_ok : exit_negative;
        }
      }
    }
    ////////////////////////////////////////////////////////////////////
    else if (orb->parsed()) {
      auto const Q = qf::io::load_quandle(f1);
      json       j;
      j["orbits"] = qf::orbits(Q);
      print(j);
    } else if (inn->parsed()) {
      auto const Q = qf::io::load_quandle(f1);
      auto const G = qf::inn_group(Q);
      json       gens = json::array();
      for (auto g : G.generators) {
        gens.push_back(G.elements[g].images());
      }
      json j;
      j["order"]      = G.order();
      j["generators"] = gens;
      print(j);
    } else if (iso->parsed()) {
      auto const Q = qf::io::load_quandle(f1);
      auto const P = qf::io::load_quandle(f2);
      auto const w = qf::is_isomorphic(Q, P);
      json       j;
      j["isomorphic"] = w.has_value();
      if (w) {
        j["witness"] = *w;
      }
      print(j);
      code = w ? exit_ok : exit_negative;
    } else if (homs->parsed()) {
      auto const Q = qf::io::load_quandle(f1);
      auto const P = qf::io::load_quandle(f2);
      auto const h = qf::homomorphisms(Q, P);
      json       j;
      j["count"]          = h.size();
      j["homomorphisms"]  = h;
      print(j);
    }
    ////////////////////////////////////////////////////////////////////
    else if (ga->parsed()) {
      auto const G  = qf::io::load_group(ga_group);
      auto const A  = parse_index_list(ga_elems);
      auto const QA = qf::ga_quandle(G, A);
      if (ga_compare) {
        auto const c = qf::compare_with_ga(G, A);
        json       j;
        j["isomorphic"]            = c.isomorphic;
        j["pairwise_non_conjugate"] = qf::pairwise_non_conjugate(G, A);
        j["ga_order"]              = c.ga_order;
        j["subquandle_order"]      = c.sub_order;
        j["ga_orbits"]             = c.ga_orbits;
        j["subquandle_orbits"]     = c.sub_orbits;
        if (c.witness) {
          j["witness"] = *c.witness;
        }
        ga_out.emit(qf::io::pretty(j));
        code = c.isomorphic ? exit_ok : exit_negative;
      } else {
        ga_out.emit(QA.quandle(), qf::io::to_json(QA));
      }
    }
    ////////////////////////////////////////////////////////////////////
    else if (env->parsed()) {
      if (ev_present->parsed()) {
        print(qf::io::to_json(qf::presentation_of(qf::io::load_quandle(ev_file))));
      } else if (ev_abel->parsed()) {
        auto const Q = qf::io::load_quandle(ev_file);
        auto       j = abelianization_json(qf::abelianization(qf::presentation_of(Q)));
        j["orbits"]  = qf::orbits(Q).size();
        print(j);
      } else if (ev_certify->parsed()) {
        auto const Q    = qf::io::load_quandle(ev_file);
        auto const cert = qf::search_certificate(Q, parse_catalog(ev_catalog));
        if (cert) {
          ev_out.emit(qf::io::pretty(qf::io::to_json(*cert, json(ev_file))));
        } else {
          std::cerr << "no certificate found in the catalog (inconclusive)\n";
          code = exit_negative;
        }
      } else if (ev_recon->parsed()) {
        auto const Q      = qf::io::load_quandle(ev_file);
        auto const loaded = qf::io::load_certificate(ev_cert);
        qf::injectivity_certificate(Q, {loaded.cert.group, loaded.cert.images});
        auto const r = qf::reconstruct_check(Q, loaded.cert);
        json       j;
        j["isomorphic"] = r.isomorphic;
        j["A"]          = r.A;
        j["ga_order"]   = r.ga_order;
        if (r.witness) {
          j["witness"] = *r.witness;
        }
        print(j);
        code = r.isomorphic ? exit_ok : exit_negative;
      } else if (ev_u->parsed()) {
        auto const r = qf::verify_u_reduction(ev_n, ev_m);
        json       j;
        j["n"]                          = r.n;
        j["m"]                          = r.m;
        j["model_order"]                = r.model_order;
        j["full_relators_hold"]         = r.full_relators_hold;
        j["reduced_relators_hold"]      = r.reduced_relators_hold;
        j["conjugation_forms_hold"]     = r.conjugation_forms_hold;
        j["images_generate"]            = r.images_generate;
        j["model_abelian"]              = r.model_abelian;
        j["coprime"]                    = r.coprime;
        j["literal_substitution_holds"] = r.literal_substitution_holds;
        j["passed"]                     = r.passed();
        print(j);
        code = r.passed() ? exit_ok : exit_negative;
      } else {
        auto const r = qf::verify_r2n(ev_n);
        json       j;
        j["n"]                       = r.n;
        j["defining_relators_hold"]  = r.defining_relators_hold;
        j["derived_distinct"]        = r.derived_distinct;
        j["derived_are_reflections"] = r.derived_are_reflections;
        j["conjugation_relators"]    = r.conjugation_relators;
        j["conjugation_relators_ok"] = r.conjugation_relators_ok;
        j["certificate_ok"]          = r.certificate_ok;
        j["passed"]                  = r.passed();
        print(j);
        code = r.passed() ? exit_ok : exit_negative;
      }
    }
    ////////////////////////////////////////////////////////////////////
    else if (fr->parsed()) {
      if (fr_fq->parsed()) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < fr_n; ++i) {
          names.push_back(generator_name(i, fr_n));
        }
        json elems = json::array();
        for (auto const& e : qf::free_quandle_elements(fr_n, fr_depth)) {
          elems.push_back(qf::fr_to_string(e, names));
        }
        json j;
        j["generators"] = names;
        j["depth"]      = fr_depth;
        j["count"]      = elems.size();
        j["elements"]   = elems;
        print(j);
      } else if (fr_prod->parsed()) {
        auto const P = qf::presentation_free_product(qf::io::load_presentation(fr_p1), qf::io::load_presentation(fr_p2));
        print(fr_envelope ? qf::io::to_json(qf::envelope_of(P)) : qf::io::to_json(P));
      } else {
        auto const e = qf::bounded_closure(qf::io::load_presentation(fr_p1), fr_depth);
        json       j;
        j["depth"]       = e.depth;
        j["words"]       = e.words;
        j["lower_bound"] = e.lower_bound;
        j["upper_bound"] = e.upper_bound;
        j["exact"]       = e.exact();
        j["models_used"] = e.models_used;
        j["free_model"]  = e.free_model;
        print(j);
      }
    }
    ////////////////////////////////////////////////////////////////////
    else if (cls->parsed()) {
      qf::EnumerationFilters f;
      f.orbit_count = cl_orbits;
      if (cl_connected) {
        f.connected = true;
      }
      auto const list = qf::enumerate_quandles(cl_order, f);
      json       qs   = json::array();
      for (auto const& Q : list) {
        qs.push_back(Q.table());
      }
      json j;
      j["order"]    = cl_order;
      j["count"]    = list.size();
      j["quandles"] = qs;
      print(j);
    } else if (scan->parsed()) {
      auto const r = qf::abenvel_scan(sc_max);
      if (sc_format == "table") {
        std::cout << "order idx orbits  abelianization  U(n,m)  gcd  verdict            quotient\n";
        for (auto const& e : r.entries) {
          std::string u = e.u ? "U(" + std::to_string(e.u->n) + "," + std::to_string(e.u->m) + ")" : "-";
          char        line[256];
          std::snprintf(line, sizeof line, "%5zu %3zu %3zu+%-3zu %-15s %-7s %4s  %-18s %s\n", e.order, e.index,
                        e.orbit_sizes[0], e.orbit_sizes[1], e.abelian.describe().c_str(), u.c_str(),
                        e.u ? std::to_string(e.gcd).c_str() : "-", qf::scan_verdict_name(e.verdict),
                        e.quotient_group.empty()
                            ? "-"
                            : (e.quotient_group + ", image order " + std::to_string(e.quotient_order)).c_str());
          std::cout << line;
        }
        std::cout << "contradictions: " << r.contradictions << ", unresolved: " << r.unresolved << "\n";
      } else {
        json entries = json::array();
        for (auto const& e : r.entries) {
          json x;
          x["order"]          = e.order;
          x["index"]          = e.index;
          x["table"]          = e.quandle.table();
          x["orbit_sizes"]    = e.orbit_sizes;
          x["abelianization"] = e.abelian.describe();
          x["u"]              = e.u ? json::array({e.u->n, e.u->m}) : json(nullptr);
          x["gcd"]            = e.u ? json(e.gcd) : json(nullptr);
          x["theorem_says_Z2"] = e.theorem_says_z2;
          x["verdict"]        = qf::scan_verdict_name(e.verdict);
          if (!e.quotient_group.empty()) {
            x["quotient_group"]  = e.quotient_group;
            x["image_order"]     = e.quotient_order;
            x["quotient_images"] = e.quotient_images;
          }
          x["contradiction"] = e.contradiction;
          entries.push_back(x);
        }
        json j;
        j["max_order"]      = r.max_order;
        j["entries"]        = entries;
        j["contradictions"] = r.contradictions;
        j["unresolved"]     = r.unresolved;
        print(j);
      }
      code = r.contradictions == 0 ? exit_ok : exit_negative;
    }
  } catch (qf::axiom_violation const& e) {
    std::cerr << "axiom violation: " << e.what() << "\n";
    return exit_negative;
  } catch (qf::certificate_failed const& e) {
    std::cerr << e.what() << "\n";
    return exit_negative;
  } catch (qf::limit_exceeded const& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return exit_limit;
  } catch (qf::error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return code;
}
