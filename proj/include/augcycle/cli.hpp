#pragma once

// Command line front end. run() is main() minus process glue, so tests can
// drive every subcommand with in-memory streams.
//
// Exit codes: 0 success / decision true, 1 decision false, 2 usage or input
// error.

#include <charconv>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "augcycle/acyclic.hpp"
#include "augcycle/io.hpp"
#include "augcycle/oracle.hpp"
#include "augcycle/quadcycle.hpp"
#include "augcycle/rng.hpp"
#include "augcycle/tricycle.hpp"

namespace augcycle::cli {

struct CliIo {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

namespace detail {

inline std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw std::invalid_argument("cannot open " + path);
    buffer << file.rdbuf();
  }
  return buffer.str();
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::istringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    if (first == std::string::npos) throw std::invalid_argument("empty entry in list");
    const auto last = item.find_last_not_of(" \t") + 1;
    int v = 0;
    const auto [p, ec] = std::from_chars(item.data() + first, item.data() + last, v);
    if (ec != std::errc{} || p != item.data() + last)
      throw std::invalid_argument("bad integer '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty integer list");
  return values;
}

inline const std::string& name_of(const DigraphDocument& doc, VertexId v) {
  return v.side == Side::one ? doc.v1[v.index] : doc.v2[v.index];
}

inline constexpr const char* case_names[] = {"one21", "one3", "no22", "no31", "no31-22"};

struct CaseSpec {
  long target;
  int k;
  SignatureSet want;
  std::function<std::optional<Completion>(const BipartiteTournament&)> construct;
};

inline CaseSpec case_spec(const std::string& name) {
  if (name == "one21")
    return {1, 3, {Signature{2, 1}}, [](const BipartiteTournament& d) { return one_augmented_21(d); }};
  if (name == "one3")
    return {1, 3, {Signature{2, 1}, Signature{3, 0}},
            [](const BipartiteTournament& d) { return one_augmented_3(d); }};
  if (name == "no22")
    return {0, 4, {Signature{2, 2}},
            [](const BipartiteTournament& d) { return no_augmented_4(d, SpecMode::d_only); }};
  if (name == "no31")
    return {0, 4, {Signature{3, 1}},
            [](const BipartiteTournament& d) { return no_augmented_4(d, SpecMode::c_only); }};
  if (name == "no31-22")
    return {0, 4, {Signature{3, 1}, Signature{2, 2}},
            [](const BipartiteTournament& d) { return no_augmented_4(d, SpecMode::both); }};
  throw std::invalid_argument("unknown case " + name);
}

inline std::vector<std::string> index_names(const char* prefix, int count) {
  std::vector<std::string> names;
  for (int i = 1; i <= count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

inline void print_counts(std::ostream& out, const std::map<Signature, long>& counts) {
  for (const auto& [sig, n] : counts)
    out << " (" << sig.major << ',' << sig.minor << ")=" << n;
}

}  // namespace detail

inline int run(std::vector<std::string> args, CliIo io) {
  CLI::App app{"bipartite tournament completion tool"};
  app.require_subcommand(1);

  std::string file = "-";
  std::string case_name;
  std::string set_spec;
  std::string k_spec = "3,4";
  int n1 = 0;
  int n2 = 0;
  std::uint64_t seed = 1;
  long target_override = 0;

  auto* validate = app.add_subcommand("validate", "parse a document and report its shape");
  validate->add_option("file", file, "input document, - for stdin");

  auto* acyclic_cmd = app.add_subcommand("acyclic", "decide acyclicity of the cross digraph");
  acyclic_cmd->add_option("file", file);

  auto* dx_repr = app.add_subcommand("dx-repr", "derive the integer-set form, if one exists");
  dx_repr->add_option("file", file);

  auto* build_dx_cmd = app.add_subcommand("build-dx", "emit the digraph of an integer set");
  build_dx_cmd->add_option("--set", set_spec, "comma separated positive integers")->required();

  auto* decide = app.add_subcommand("decide", "decide whether a qualifying completion exists");
  decide->add_option("case", case_name)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(detail::case_names),
                                                     std::end(detail::case_names))));
  decide->add_option("file", file);

  auto* construct = app.add_subcommand("construct", "emit a qualifying completion");
  construct->add_option("case", case_name)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(detail::case_names),
                                                     std::end(detail::case_names))));
  construct->add_option("file", file);

  auto* oracle = app.add_subcommand("oracle", "exhaustive checks over all completions");
  oracle->require_subcommand(1);
  auto* census = oracle->add_subcommand("census", "augmented dicycle counts per completion");
  census->add_option("file", file);
  census->add_option("--k", k_spec, "comma separated lengths (default 3,4)");
  auto* oracle_decide = oracle->add_subcommand("decide", "decide a case by enumeration");
  oracle_decide->add_option("case", case_name)
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>(std::begin(detail::case_names),
                                                     std::end(detail::case_names))));
  oracle_decide->add_option("file", file);
  auto* target_opt =
      oracle_decide->add_option("--t", target_override, "override the target count");

  auto* gen = app.add_subcommand("gen", "emit a pseudorandom document");
  gen->add_option("--n1", n1, "side one size")->required();
  gen->add_option("--n2", n2, "side two size")->required();
  gen->add_option("--seed", seed, "generator seed (default 1)");

  auto* export_dot_cmd = app.add_subcommand("export-dot", "emit DOT for a document");
  export_dot_cmd->add_option("file", file);

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, io.out, io.err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, io.out, io.err);
    return 2;
  }

  try {
    auto load = [&] { return parse_document(detail::slurp(file, io.in)); };

    if (validate->parsed()) {
      const DigraphDocument doc = load();
      io.out << "ok: " << (doc.has_intra ? "completion" : "base") << " document, n1=" << doc.v1.size()
             << ", n2=" << doc.v2.size() << "\n";
      return 0;
    }

    if (acyclic_cmd->parsed()) {
      const DigraphDocument doc = load();
      if (const auto cycle = find_4_dicycle(to_bipartite(doc))) {
        io.out << "cyclic:";
        for (const VertexId v : cycle->vertices()) io.out << ' ' << detail::name_of(doc, v);
        io.out << "\n";
        return 1;
      }
      io.out << "acyclic\n";
      return 0;
    }

    if (dx_repr->parsed()) {
      const DigraphDocument doc = load();
      const auto rep = dx_decompose(to_bipartite(doc));
      if (!rep) {
        io.out << "no integer-set form (the digraph has a dicycle)\n";
        return 1;
      }
      io.out << "set:";
      for (const int v : rep->set.values()) io.out << ' ' << v;
      io.out << "\nmap:";
      for (std::size_t i = 0; i < rep->order.size(); ++i)
        io.out << ' ' << detail::name_of(doc, rep->order[i]) << '=' << rep->set.values()[i];
      io.out << "\n";
      return 0;
    }

    if (build_dx_cmd->parsed()) {
      const IntegerSet set{detail::parse_int_list(set_spec)};
      const BipartiteTournament d = build_dx(set);
      std::vector<std::string> names1, names2;
      for (const int v : set.values())
        (v % 2 == 1 ? names1 : names2).push_back(std::to_string(v));
      io.out << format_document(document_from(d, std::move(names1), std::move(names2)));
      return 0;
    }

    if (decide->parsed() || construct->parsed()) {
      const DigraphDocument doc = load();
      const auto witness = detail::case_spec(case_name).construct(to_bipartite(doc));
      if (decide->parsed()) {
        io.out << (witness ? "yes" : "no") << "\n";
        return witness ? 0 : 1;
      }
      if (!witness) {
        io.err << "no qualifying completion\n";
        return 1;
      }
      io.out << format_document(with_completion(doc, *witness));
      return 0;
    }

    if (census->parsed()) {
      const DigraphDocument doc = load();
      std::set<int> ks;
      for (const int k : detail::parse_int_list(k_spec)) ks.insert(k);
      if (doc.has_intra) {
        const Completion t = to_completion(doc);
        for (const int k : ks) {
          io.out << "k=" << k << ':';
          detail::print_counts(io.out, augcycle::detail::augmented_counts(t, k));
          io.out << "\n";
        }
        return 0;
      }
      for (const CensusEntry& entry : augcycle::census(to_bipartite(doc), ks)) {
        io.out << "completion " << entry.completion_index << ':';
        for (const int k : ks) {
          std::map<Signature, long> per_k;
          for (const auto& [key, n] : entry.counts)
            if (key.first == k) per_k[key.second] = n;
          io.out << " k=" << k << ':';
          detail::print_counts(io.out, per_k);
        }
        io.out << "\n";
      }
      return 0;
    }

    if (oracle_decide->parsed()) {
      const DigraphDocument doc = load();
      const detail::CaseSpec spec = detail::case_spec(case_name);
      const long target = target_opt->count() > 0 ? target_override : spec.target;
      const bool hit = brute_decide(to_bipartite(doc), target, spec.k, spec.want);
      io.out << (hit ? "yes" : "no") << "\n";
      return hit ? 0 : 1;
    }

    if (gen->parsed()) {
      Lcg64 rng(seed);
      const BipartiteTournament d = random_bipartite(n1, n2, rng);
      io.out << "# seed: " << seed << "\n"
             << format_document(document_from(d, detail::index_names("u", n1),
                                              detail::index_names("v", n2)));
      return 0;
    }

    if (export_dot_cmd->parsed()) {
      io.out << export_dot(load());
      return 0;
    }
  } catch (const ParseError& e) {
    io.err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace augcycle::cli
