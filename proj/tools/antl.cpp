#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "antl/antl.hpp"

// Command-line front end. Configurations and index sets are written in
// circle labels 0..n-1 on both input and output; words are generator
// indices, leftmost factor first.

namespace {

using namespace antl;

int g_exit = 0;

int enumeration_cap() {
  const char* env = std::getenv("ANTL_MAX_LEN");
  if (!env) return 8;
  const int cap = std::atoi(env);
  return cap > 0 ? cap : 8;
}

void emit(const json& j, const std::string& text, const std::string& format) {
  if (format == "json") std::cout << j.dump() << "\n";
  else std::cout << text << "\n";
}

json element_json(const Element& e) {
  json terms = json::array();
  for (const auto& [letters, coeff] : e.terms())
    terms.push_back({{"coeff", coeff}, {"word", letters}});
  return json{{"n", e.n()}, {"terms", terms}};
}

void add_normalize(CLI::App& app) {
  auto* cmd = app.add_subcommand("normalize", "normal form of a word");
  auto n = std::make_shared<int>(0);
  auto word = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("word", *word, "word, e.g. \"6 4 2 1\"")->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    NormalForm nf = normalize(parse_word(Rank(*n), *word));
    const std::string text = format_normal_form(nf);
    emit(json{{"n", *n}, {"word", *word}, {"normal_form", text}}, text, *format);
  });
}

void add_act(CLI::App& app) {
  auto* cmd = app.add_subcommand("act", "apply a word to a configuration");
  auto n = std::make_shared<int>(0);
  auto word = std::make_shared<std::string>();
  auto config = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--word", *word)->required();
  cmd->add_option("--config", *config, "circle labels, e.g. \"5 0\"")->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    Rank rank(*n);
    auto hit = act_word(parse_word(rank, *word), parse_config(rank, *config));
    if (!hit) {
      emit(json{{"n", *n}, {"scalar", json::array()}, {"config", nullptr}}, "0",
           *format);
      return;
    }
    emit(json{{"n", *n},
              {"scalar", qpoly_json(hit->first)},
              {"config", hit->second.circle_labels()}},
         format_action(hit->first, hit->second), *format);
  });
}

void add_matrix(CLI::App& app) {
  auto* cmd = app.add_subcommand("matrix", "k-particle block of a word");
  auto n = std::make_shared<int>(0);
  auto k = std::make_shared<int>(0);
  auto word = std::make_shared<std::string>();
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--k", *k, "particle count")->required();
  cmd->add_option("--word", *word)->required();
  cmd->callback([=] {
    Rank rank(*n);
    RepMatrix m = matrix_block(Element::from_word(parse_word(rank, *word)), *k);
    std::cout << repmatrix_json(m).dump() << "\n";
  });
}

void add_center(CLI::App& app) {
  auto* cmd = app.add_subcommand("center", "central generator t_k");
  auto n = std::make_shared<int>(0);
  auto k = std::make_shared<int>(0);
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--k", *k, "particle count")->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    Element t = central_generator(*k, Rank(*n));
    emit(element_json(t), format_element(t), *format);
  });
}

void add_e_word(CLI::App& app) {
  auto* cmd = app.add_subcommand("e-word", "minimal monomial moving J to I");
  auto n = std::make_shared<int>(0);
  auto iset = std::make_shared<std::string>();
  auto jset = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--i", *iset, "target configuration, circle labels")->required();
  cmd->add_option("--j", *jset, "source configuration, circle labels")->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    Rank rank(*n);
    Word e = e_word(parse_config(rank, *iset), parse_config(rank, *jset));
    emit(json{{"n", *n}, {"word", format_word(e)}}, format_word(e), *format);
  });
}

void add_factorize(CLI::App& app) {
  auto* cmd = app.add_subcommand("factorize", "basis label of a monomial");
  auto n = std::make_shared<int>(0);
  auto word = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--word", *word)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    Rank rank(*n);
    BasisLabel label = factorize(parse_word(rank, *word));
    emit(json{{"n", *n},
              {"k", label.k},
              {"l", label.ell},
              {"I", label.i_out.circle_labels()},
              {"J", label.i_in.circle_labels()}},
         format_basis_label(label), *format);
  });
}

void add_embed(CLI::App& app) {
  auto* cmd = app.add_subcommand("embed", "rank-raising embedding of a word");
  auto n = std::make_shared<int>(0);
  auto m = std::make_shared<int>(0);
  auto word = std::make_shared<std::string>();
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--m", *m, "insertion position")->required();
  cmd->add_option("--word", *word)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    Word image = embed_word(*m, parse_word(Rank(*n), *word));
    emit(json{{"n", *n}, {"m", *m}, {"word", *word}, {"image", format_word(image)}},
         format_word(image), *format);
  });
}

void add_enumerate(CLI::App& app) {
  auto* cmd = app.add_subcommand("enumerate", "basis labels up to a q-count");
  auto n = std::make_shared<int>(0);
  auto ell_max = std::make_shared<int>(0);
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  cmd->add_option("--ell-max", *ell_max)->required();
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    auto basis = enumerate_basis(Rank(*n), *ell_max);
    if (*format == "json") {
      json out = json::array();
      for (const auto& [label, word] : basis)
        out.push_back({{"label", format_basis_label(label)},
                       {"word", format_word(word)}});
      std::cout << out.dump() << "\n";
    } else {
      for (const auto& [label, word] : basis)
        std::cout << format_basis_label(label) << "  [" << format_word(word)
                  << "]\n";
    }
  });
}

void add_verify(CLI::App& app) {
  auto* cmd = app.add_subcommand("verify", "run named invariant suites");
  auto n = std::make_shared<int>(0);
  auto suite = std::make_shared<std::string>("all");
  auto format = std::make_shared<std::string>("text");
  cmd->add_option("--n", *n, "rank")->required();
  auto allowed = verify_suite_names();
  allowed.push_back("all");
  cmd->add_option("--suite", *suite)->check(CLI::IsMember(allowed));
  cmd->add_option("--format", *format)->check(CLI::IsMember({"text", "json"}));
  cmd->callback([=] {
    auto results = run_verify(*suite, Rank(*n), enumeration_cap());
    bool all_pass = true;
    json out = json::array();
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      if (*format == "json") {
        out.push_back({{"suite", r.suite}, {"check", r.name}, {"pass", r.pass}});
      } else {
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << "/" << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
      }
    }
    if (*format == "json") std::cout << out.dump() << "\n";
    if (!all_pass) g_exit = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations in the affine nilTemperley-Lieb algebra"};
  app.require_subcommand(1);
  add_normalize(app);
  add_act(app);
  add_matrix(app);
  add_center(app);
  add_e_word(app);
  add_factorize(app);
  add_embed(app);
  add_enumerate(app);
  add_verify(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
