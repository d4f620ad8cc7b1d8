// deckgen: turn a sectioned, figure-bearing document into a slide deck.
//
// Subcommands:
//   generate  staged pipeline (summaries -> outline -> grounding -> slides -> images)
//   baseline  single-shot prompting over the whole document (flat/cot/cons)
//   evaluate  coverage / perplexity / judge score of a deck against its document
//
// Exit codes: 0 success, 2 usage, 3 input schema, 4 provider failure,
// 5 stage failure.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "deckgen/baselines.hpp"
#include "deckgen/config.hpp"
#include "deckgen/deck.hpp"
#include "deckgen/errors.hpp"
#include "deckgen/evaluator.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/http_provider.hpp"
#include "deckgen/pipeline.hpp"
#include "deckgen/text_util.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;
constexpr int kExitProvider = 4;
constexpr int kExitStage = 5;

struct CommonArgs {
  std::string doc_path;
  std::string config_path;
  std::string cache_dir_override;
  std::string out_path;
};

void print_warnings(const deckgen::Diagnostics& diag) {
  for (const std::string& warning : diag.warnings()) {
    std::cerr << "warning: " << warning << "\n";
  }
}

deckgen::AppConfig load_effective_config(const CommonArgs& args) {
  deckgen::AppConfig config = deckgen::load_config(args.config_path);
  if (!args.cache_dir_override.empty()) config.cache_dir = args.cache_dir_override;
  return config;
}

// Credentials are checked before any stage runs so a missing secret fails
// fast instead of mid-pipeline.
void check_credentials(const deckgen::ProviderSpec& spec) {
  if (spec.kind == "http") deckgen::resolve_api_key(spec.model);
}

int run_generate_command(const CommonArgs& common, int slides, int max_bullets, bool no_images,
                         const std::string& outline_in, const std::string& outline_out,
                         const std::string& birdseye_out, const std::string& mapping_out,
                         const std::string& markdown_out) {
  deckgen::Diagnostics diag;
  deckgen::AppConfig config = load_effective_config(common);
  if (slides > 0) config.pipeline.slides = slides;
  if (max_bullets > 0) config.pipeline.max_bullets = max_bullets;
  check_credentials(config.provider);

  const deckgen::Document doc = deckgen::parse_document(common.doc_path, &diag);

  deckgen::GenerateOptions options;
  options.with_images = !no_images;
  if (!outline_in.empty()) {
    options.injected_outline = deckgen::outline_from_json(deckgen::read_file(outline_in));
  }

  std::unique_ptr<deckgen::ChatProvider> provider = deckgen::make_provider(config.provider);
  std::unique_ptr<deckgen::JointEmbedder> embedder;
  if (options.with_images) embedder = deckgen::make_embedder(config.embedder);

  const deckgen::GenerateResult result =
      deckgen::run_generate(doc, config, *provider, embedder.get(), options, &diag);

  deckgen::write_file_atomic(common.out_path, deckgen::emit_structured(result.deck));
  if (!markdown_out.empty()) {
    deckgen::write_file_atomic(markdown_out, deckgen::emit_markdown(result.deck));
  }
  if (!outline_out.empty()) {
    deckgen::write_file_atomic(outline_out, deckgen::outline_to_json(result.outline));
  }
  if (!birdseye_out.empty()) {
    deckgen::write_file_atomic(birdseye_out, deckgen::birdseye_to_json(result.birdseye));
  }
  if (!mapping_out.empty()) {
    deckgen::write_file_atomic(mapping_out, deckgen::mapping_to_json(result.mapping));
  }
  print_warnings(diag);
  std::cout << "wrote " << common.out_path << " (" << result.deck.slides.size() << " slides)\n";
  return kExitOk;
}

int run_baseline_command(const CommonArgs& common, const std::string& kind_name, int slides,
                         const std::string& markdown_out) {
  deckgen::Diagnostics diag;
  deckgen::AppConfig config = load_effective_config(common);
  if (slides > 0) config.pipeline.slides = slides;
  check_credentials(config.provider);

  const deckgen::BaselineKind kind = deckgen::baseline_kind_from_string(kind_name);
  const deckgen::Document doc = deckgen::parse_document(common.doc_path, &diag);

  std::unique_ptr<deckgen::ChatProvider> provider = deckgen::make_provider(config.provider);
  deckgen::Gateway gateway(*provider, deckgen::GatewayOptions{config.cache_dir, {}});

  const deckgen::Deck deck =
      deckgen::run_baseline(kind, doc, config.pipeline.slides, gateway, config.provider.model,
                            deckgen::config_digest(config), &diag);

  deckgen::write_file_atomic(common.out_path, deckgen::emit_structured(deck));
  if (!markdown_out.empty()) {
    deckgen::write_file_atomic(markdown_out, deckgen::emit_markdown(deck));
  }
  print_warnings(diag);
  std::cout << "wrote " << common.out_path << " (" << deck.slides.size() << " slides)\n";
  return kExitOk;
}

int run_evaluate_command(const CommonArgs& common, const std::string& deck_path, bool skip_ppl,
                         bool skip_llm_eval) {
  deckgen::Diagnostics diag;
  deckgen::AppConfig config = load_effective_config(common);

  const deckgen::Document doc = deckgen::parse_document(common.doc_path, &diag);
  const deckgen::Deck deck = deckgen::load_structured(deckgen::read_file(deck_path));

  std::unique_ptr<deckgen::JointEmbedder> embedder = deckgen::make_embedder(config.embedder);
  std::unique_ptr<deckgen::TokenScorer> scorer;
  if (!skip_ppl) scorer = deckgen::make_scorer(config.scorer);

  std::unique_ptr<deckgen::ChatProvider> judge_provider;
  std::unique_ptr<deckgen::Gateway> judge_gateway;
  const deckgen::ProviderSpec& judge_spec = config.judge ? *config.judge : config.provider;
  if (!skip_llm_eval) {
    check_credentials(judge_spec);
    judge_provider = deckgen::make_provider(judge_spec);
    judge_gateway = std::make_unique<deckgen::Gateway>(
        *judge_provider, deckgen::GatewayOptions{config.cache_dir, {}});
  }

  deckgen::EvaluateOptions options;
  options.skip_ppl = skip_ppl;
  options.skip_llm_eval = skip_llm_eval;
  const deckgen::MetricReport report =
      deckgen::evaluate(deck, doc, *embedder, scorer.get(), judge_gateway.get(),
                        &judge_spec.model, options);

  deckgen::write_file_atomic(common.out_path, deckgen::report_to_json(report));
  print_warnings(diag);
  std::cout << deckgen::report_to_table(report);
  std::cout << "wrote " << common.out_path << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"document-to-presentation generator"};
  app.require_subcommand(1);

  CommonArgs generate_args;
  int generate_slides = 0;
  int generate_max_bullets = 0;
  bool no_images = false;
  std::string seed_config_path;
  std::string outline_in, outline_out, birdseye_out, mapping_out, generate_markdown;

  CLI::App* generate = app.add_subcommand("generate", "run the staged pipeline");
  generate->add_option("--doc", generate_args.doc_path, "canonical extraction file");
  generate->add_option("--config", generate_args.config_path, "config file");
  generate->add_option("--seed-config", seed_config_path,
                       "write a starter config file to this path and exit");
  generate->add_option("--out", generate_args.out_path, "deck output file")
      ->default_val("deck.json");
  generate->add_option("--markdown", generate_markdown, "also write a Markdown render");
  generate->add_option("--slides", generate_slides, "number of slides K");
  generate->add_option("--max-bullets", generate_max_bullets, "bullet cap per slide");
  generate->add_flag("--no-images", no_images, "skip the image selection stage");
  generate->add_option("--outline-in", outline_in, "inject an outline, skipping generation");
  generate->add_option("--outline-out", outline_out, "dump the outline");
  generate->add_option("--birdseye-out", birdseye_out, "dump the hierarchical summary");
  generate->add_option("--mapping-out", mapping_out, "dump the slide-to-section mapping");
  generate->add_option("--cache-dir", generate_args.cache_dir_override,
                       "override the response cache directory");

  CommonArgs baseline_args;
  std::string baseline_kind;
  int baseline_slides = 0;
  std::string baseline_markdown;

  CLI::App* baseline = app.add_subcommand("baseline", "run a single-shot baseline");
  baseline->add_option("--doc", baseline_args.doc_path, "canonical extraction file")->required();
  baseline->add_option("--config", baseline_args.config_path, "config file")->required();
  baseline->add_option("--kind", baseline_kind, "flat, cot or cons")
      ->required()
      ->check(CLI::IsMember({"flat", "cot", "cons"}));
  baseline->add_option("--out", baseline_args.out_path, "deck output file")
      ->default_val("deck.json");
  baseline->add_option("--markdown", baseline_markdown, "also write a Markdown render");
  baseline->add_option("--slides", baseline_slides, "number of slides K");
  baseline->add_option("--cache-dir", baseline_args.cache_dir_override,
                       "override the response cache directory");

  CommonArgs evaluate_args;
  std::string deck_path;
  bool skip_ppl = false;
  bool skip_llm_eval = false;

  CLI::App* evaluate = app.add_subcommand("evaluate", "score a deck against its document");
  evaluate->add_option("--deck", deck_path, "deck file")->required();
  evaluate->add_option("--doc", evaluate_args.doc_path, "canonical extraction file")->required();
  evaluate->add_option("--config", evaluate_args.config_path, "config file")->required();
  evaluate->add_option("--out", evaluate_args.out_path, "report output file")
      ->default_val("report.json");
  evaluate->add_flag("--skip-ppl", skip_ppl, "skip perplexity");
  evaluate->add_flag("--skip-llm-eval", skip_llm_eval, "skip the judge score");
  evaluate->add_option("--cache-dir", evaluate_args.cache_dir_override,
                       "override the response cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (generate->parsed()) {
      if (!seed_config_path.empty()) {
        deckgen::write_file_atomic(seed_config_path, deckgen::example_config_json());
        std::cout << "wrote " << seed_config_path << "\n";
        return kExitOk;
      }
      if (generate_args.doc_path.empty() || generate_args.config_path.empty()) {
        std::cerr << "error: generate needs --doc and --config (or --seed-config)\n";
        return kExitUsage;
      }
      return run_generate_command(generate_args, generate_slides, generate_max_bullets, no_images,
                                  outline_in, outline_out, birdseye_out, mapping_out,
                                  generate_markdown);
    }
    if (baseline->parsed()) {
      return run_baseline_command(baseline_args, baseline_kind, baseline_slides,
                                  baseline_markdown);
    }
    if (evaluate->parsed()) {
      return run_evaluate_command(evaluate_args, deck_path, skip_ppl, skip_llm_eval);
    }
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const deckgen::SchemaError& e) {
    std::cerr << "error (schema): " << e.what() << "\n";
    return kExitSchema;
  } catch (const deckgen::InvariantError& e) {
    std::cerr << "error (invariant): " << e.what() << "\n";
    return kExitSchema;
  } catch (const deckgen::ConfigError& e) {
    std::cerr << "error (config): " << e.what() << "\n";
    return kExitSchema;
  } catch (const deckgen::ProviderError& e) {
    std::cerr << "error (provider): " << e.what() << "\n";
    return kExitProvider;
  } catch (const deckgen::ContextOverflow& e) {
    std::cerr << "error (provider): " << e.what() << "\n";
    return kExitProvider;
  } catch (const deckgen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitStage;
  }
}
