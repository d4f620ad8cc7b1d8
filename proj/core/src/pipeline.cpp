#include "deckgen/pipeline.hpp"

#include "deckgen/baselines.hpp"
#include "deckgen/birdseye.hpp"
#include "deckgen/errors.hpp"
#include "deckgen/gateway.hpp"
#include "deckgen/image_selector.hpp"
#include "deckgen/outline.hpp"
#include "deckgen/section_mapper.hpp"
#include "deckgen/slide_writer.hpp"

namespace deckgen {

GenerateResult run_generate(const Document& doc, const AppConfig& config, ChatProvider& provider,
                            JointEmbedder* embedder, const GenerateOptions& options,
                            Diagnostics* diag) {
  const ModelConfig& model = config.provider.model;
  Gateway gateway(provider, GatewayOptions{config.cache_dir, {}});

  GenerateResult result;

  SummaryOptions summary_options;
  summary_options.target_summary_words = config.pipeline.summary_words;
  result.birdseye = build_birdseye(doc, gateway, model, summary_options, diag);

  if (options.injected_outline) {
    result.outline = *options.injected_outline;
  } else {
    result.outline =
        generate_outline(result.birdseye, config.pipeline.slides, gateway, model, diag);
  }

  result.mapping = build_mapping(result.outline, result.birdseye, doc, gateway, model,
                                 config.pipeline.thresholds, diag);

  WriterOptions writer_options;
  writer_options.max_bullets = config.pipeline.max_bullets;
  const std::vector<SlideText> texts = write_deck_text(
      result.outline, result.mapping, doc, result.birdseye, gateway, model, writer_options, diag);

  std::vector<std::optional<ScoredImage>> selections(texts.size());
  if (options.with_images) {
    if (embedder == nullptr) throw ConfigError("image selection needs an embedder");
    for (std::size_t i = 0; i < texts.size(); ++i) {
      selections[i] =
          select_image(texts[i], result.mapping.entries[i], doc, *embedder, config.selector);
    }
  }

  const GeneratorInfo generator{"staged", model.model_name, config_digest(config)};
  result.deck = assemble(texts, selections, result.mapping, doc, generator);
  return result;
}

}  // namespace deckgen
