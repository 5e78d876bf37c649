#include "arrpair/cli.hpp"

#include <functional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "arrpair/errors.hpp"
#include "arrpair/io.hpp"
#include "arrpair/matroid_nerve.hpp"
#include "arrpair/pairing.hpp"
#include "arrpair/svg.hpp"

namespace arrpair {

namespace {

struct Options {
  bool json = false;
  std::string order = "lex";
  std::string path;
  std::string output;
  std::string theta;
  std::string psi;
};

RegionOrder region_order(const Options& o) { return o.order == "input" ? RegionOrder::Input : RegionOrder::Lex; }

std::string point_string(const QVector& p) {
  std::string s = "(";
  for (std::size_t j = 0; j < p.size(); ++j) s += (j ? "," : "") + to_string(p[j]);
  return s + ")";
}

std::string simplex_string(const Simplex& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.indices.size(); ++k) out += (k ? "," : "") + std::to_string(s.indices[k] + 1);
  return out + "]";
}

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ", " : "") + std::to_string(v[k]);
  return out + ")";
}

void print_matrix(std::ostream& out, const IntMatrix& M) {
  std::size_t width = 1;
  for (const auto& row : M)
    for (auto x : row) width = std::max(width, std::to_string(x).size());
  for (const auto& row : M) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      const std::string cell = std::to_string(row[j]);
      out << (j ? " " : "") << std::string(width - cell.size(), ' ') << cell;
    }
    out << "\n";
  }
}

QVector parse_list(const std::string& text) {
  QVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw ParseError("empty rational list");
  return out;
}

int cmd_regions(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  const BoundedComplex bc = bounded_complex(arr, region_order(o));
  if (o.json) {
    Json regions = Json::array();
    for (std::size_t i = 0; i < bc.regions.size(); ++i) {
      const auto& f = bc.regions[i].face;
      Json vs = Json::array();
      for (auto id : f.vertex_ids) vs.push_back(vector_to_json(bc.vertices[id].point));
      Json entry;
      entry["index"] = i + 1;
      entry["signs"] = to_string(f.signs);
      entry["vertex_count"] = f.vertex_ids.size();
      entry["vertices"] = std::move(vs);
      regions.push_back(std::move(entry));
    }
    Json doc;
    doc["region_count"] = bc.regions.size();
    doc["regions"] = std::move(regions);
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "r = " << bc.regions.size() << "\n";
  for (std::size_t i = 0; i < bc.regions.size(); ++i) {
    const auto& f = bc.regions[i].face;
    out << "F" << i + 1 << "  signs " << to_string(f.signs) << "  vertices " << f.vertex_ids.size() << ":";
    for (auto id : f.vertex_ids) out << " " << point_string(bc.vertices[id].point);
    out << "\n";
  }
  return kExitOk;
}

int cmd_phi(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load_arrangement(o.path);
  const BoundedComplex bc = bounded_complex(arr, region_order(o));
  if (bc.regions.empty()) {
    err << "no bounded regions\n";
    return kExitChecksFailed;
  }
  const IntMatrix phi = phi_matrix(bc);
  if (o.json) {
    Json doc;
    doc["phi"] = int_matrix_to_json(phi);
    out << doc.dump() << "\n";
  } else {
    print_matrix(out, phi);
  }
  return kExitOk;
}

int cmd_gram(const Options& o, std::ostream& out, std::ostream& err) {
  const Arrangement arr = load_arrangement(o.path);
  const BoundedComplex bc = bounded_complex(arr, region_order(o));
  if (bc.regions.empty()) {
    err << "no bounded regions\n";
    return kExitChecksFailed;
  }
  const IntMatrix gram = gram_matrix(arr, bc);
  if (o.json) {
    Json doc;
    doc["gram"] = int_matrix_to_json(gram);
    out << doc.dump() << "\n";
  } else {
    print_matrix(out, gram);
  }
  return kExitOk;
}

int cmd_psi(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  const BoundedComplex bc = bounded_complex(arr, region_order(o));
  Json chains = Json::array();
  for (std::size_t i = 0; i < bc.regions.size(); ++i) {
    const PsiChain c = psi(arr, bc, i);
    if (o.json) {
      Json terms = Json::array();
      for (const auto& [s, coeff] : c.chain.terms()) {
        Json t;
        Json idx = Json::array();
        for (auto v : s.indices) idx.push_back(v + 1);
        t["simplex"] = std::move(idx);
        t["coefficient"] = rational_to_json(coeff);
        terms.push_back(std::move(t));
      }
      Json entry;
      entry["region"] = i + 1;
      entry["degree"] = c.chain.degree();
      entry["terms"] = std::move(terms);
      chains.push_back(std::move(entry));
    } else {
      out << "F" << i + 1 << ":";
      for (const auto& [s, coeff] : c.chain.terms()) out << " " << (coeff > 0 ? "+" : "-") << simplex_string(s);
      out << "\n";
    }
  }
  if (o.json) {
    Json doc;
    doc["psi"] = std::move(chains);
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

void print_certificate(std::ostream& out, const char* label, const DefinitenessCertificate& cert) {
  out << label << ": " << to_string(cert.verdict) << "  leading minors (";
  for (std::size_t k = 0; k < cert.leading_minors.size(); ++k)
    out << (k ? ", " : "") << to_string(cert.leading_minors[k]);
  out << ")\n";
  if (cert.negative_witness)
    out << "  negative witness " << point_string(*cert.negative_witness) << "  value "
        << to_string(*cert.negative_value) << "\n";
  if (cert.positive_witness)
    out << "  positive witness " << point_string(*cert.positive_witness) << "  value "
        << to_string(*cert.positive_value) << "\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  const VerificationReport rep = verify(arr, region_order(o));
  const Json doc = report_to_json(rep);
  if (!o.output.empty()) write_file(o.output, doc.dump(2) + "\n");
  if (o.json) {
    out << doc.dump(2) << "\n";
  } else {
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    out << "m = " << rep.ambient_dim << ", s = " << rep.hyperplane_count << ", r = " << rep.region_count << "\n";
    out << "simple: " << yes(rep.is_simple) << ", coloop-free: " << yes(rep.is_coloop_free) << "\n";
    if (!rep.phi.empty()) {
      out << "Phi:\n";
      print_matrix(out, rep.phi);
    }
    if (rep.gram) {
      out << "Gram:\n";
      print_matrix(out, *rep.gram);
      out << "Phi = (-1)^m Gram: " << yes(rep.identity_holds) << "\n";
      out << "Psi chains are cycles: " << yes(rep.psi_cycles) << "\n";
      out << "Psi rank: " << rep.psi_rank << " (independent: " << yes(rep.psi_independent) << ")\n";
    }
    out << "top reduced homology rank of the independence complex: " << rep.homology_rank_top
        << " (matches r: " << yes(rep.rank_matches_r) << ")\n";
    if (!rep.phi.empty()) {
      print_certificate(out, "Phi", rep.phi_definiteness);
      print_certificate(out, "(-1)^m Phi", rep.definiteness);
    }
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
    out << "verdict: " << to_string(rep.theorem_verdict) << "\n";
  }
  return rep.theorem_verdict == TheoremVerdict::Verified ? kExitOk : kExitChecksFailed;
}

int cmd_nerve(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  const SimplicialComplex ind = independence_complex(arr);
  const SimplicialComplex nrv = nerve_complex(arr);
  const ComplexDifference diff = compare_complexes(ind, nrv);
  const auto ind_ranks = reduced_homology_ranks(ind);
  const auto nrv_ranks = reduced_homology_ranks(nrv);
  if (o.json) {
    auto simplices = [](const std::vector<Simplex>& list) {
      Json a = Json::array();
      for (const auto& s : list) {
        Json idx = Json::array();
        for (auto v : s.indices) idx.push_back(v + 1);
        a.push_back(std::move(idx));
      }
      return a;
    };
    Json doc;
    doc["independence_f_vector"] = ind.f_vector();
    doc["nerve_f_vector"] = nrv.f_vector();
    doc["complexes_equal"] = diff.empty();
    doc["only_in_independence"] = simplices(diff.only_in_first);
    doc["only_in_nerve"] = simplices(diff.only_in_second);
    doc["independence_reduced_homology"] = ind_ranks;
    doc["nerve_reduced_homology"] = nrv_ranks;
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "independence complex f-vector: " << tuple_string(ind.f_vector()) << "\n";
  out << "nerve complex f-vector: " << tuple_string(nrv.f_vector()) << "\n";
  out << "complexes equal: " << (diff.empty() ? "yes" : "no") << "\n";
  for (const auto& s : diff.only_in_first) out << "only in independence complex: " << simplex_string(s) << "\n";
  for (const auto& s : diff.only_in_second) out << "only in nerve complex: " << simplex_string(s) << "\n";
  out << "independence complex reduced homology ranks: " << tuple_string(ind_ranks) << "\n";
  out << "nerve complex reduced homology ranks: " << tuple_string(nrv_ranks) << "\n";
  return kExitOk;
}

int cmd_homology(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  const auto ranks = reduced_homology_ranks(independence_complex(arr));
  if (o.json) {
    Json doc;
    doc["reduced_homology"] = ranks;
    out << doc.dump() << "\n";
  } else {
    for (std::size_t k = 0; k < ranks.size(); ++k) out << "H~_" << k << " rank " << ranks[k] << "\n";
  }
  return kExitOk;
}

int cmd_gale(const Options& o, std::ostream& out) {
  Json doc;
  try {
    doc = Json::parse(read_file(o.path));
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const QMatrix A = matrix_from_json(doc.is_object() && doc.contains("A") ? doc.at("A") : doc);
  Arrangement arr = [&] {
    if (!o.psi.empty()) {
      const QVector psi = parse_list(o.psi);
      if (!o.theta.empty() && A * psi != parse_list(o.theta)) throw InconsistentSystem("gale: A psi != theta");
      return gale_arrangement_from_lift(A, psi);
    }
    if (o.theta.empty()) throw ParseError("gale: --theta or --psi is required");
    return gale_arrangement(A, parse_list(o.theta));
  }();
  const std::string text = serialize_arrangement(arr);
  if (!o.output.empty())
    write_file(o.output, text);
  else
    out << text;
  return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  const Arrangement arr = load_arrangement(o.path);
  if (arr.ambient_dim() != 2) throw PreconditionError("render supports m = 2 only");
  const std::string svg = render_svg(arr, bounded_complex(arr, region_order(o)));
  write_file(o.output, svg);
  if (!o.json) out << "wrote " << o.output << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact intersection pairings of bounded regions of hyperplane arrangements", "arrpair"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable JSON output");
  app.add_option("--order", o.order, "Region ordering")->check(CLI::IsMember({"lex", "input"}));

  std::function<int()> action;
  auto file_command = [&](const char* name, const char* help, std::function<int()> fn) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.path, "Arrangement file (JSON)")->required();
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  file_command("regions", "List bounded regions", [&] { return cmd_regions(o, out); });
  file_command("phi", "Intersection pairing matrix", [&] { return cmd_phi(o, out, err); });
  file_command("gram", "Gram matrix of the cycle map", [&] { return cmd_gram(o, out, err); });
  file_command("psi", "Cycle-map chains per region", [&] { return cmd_psi(o, out); });
  auto* verify_cmd = file_command("verify", "Check the definiteness theorem", [&] { return cmd_verify(o, out); });
  verify_cmd->add_option("-o,--output", o.output, "Also write the report file here");
  file_command("nerve", "Independence and nerve complexes", [&] { return cmd_nerve(o, out); });
  file_command("homology", "Reduced homology of the independence complex", [&] { return cmd_homology(o, out); });

  auto* gale = app.add_subcommand("gale", "Arrangement from toric data (A, theta)");
  gale->add_option("matrix", o.path, "JSON file with the d x n matrix A")->required();
  gale->add_option("--theta", o.theta, "Comma-separated rationals, length d");
  gale->add_option("--psi", o.psi, "Explicit lift psi with A psi = theta");
  gale->add_option("-o,--output", o.output, "Write the arrangement file here");
  gale->callback([&] { action = [&] { return cmd_gale(o, out); }; });

  auto* render = app.add_subcommand("render", "SVG picture of a planar arrangement");
  render->add_option("file", o.path, "Arrangement file (JSON)")->required();
  render->add_option("svg", o.output, "Output SVG path")->required();
  render->callback([&] { action = [&] { return cmd_render(o, out); }; });

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }

  try {
    return action();
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << "\n";
    return kExitChecksFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace arrpair
