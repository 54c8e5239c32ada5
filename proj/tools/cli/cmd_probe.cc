// Copyright 2026 The funcword Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <memory>
#include <sstream>
#include <vector>

#include "cli/commands.h"
#include "funcword/attention_io.h"
#include "funcword/probe.h"

namespace funcword::cli {
namespace {

struct ProbeCommandOptions {
  std::string bundles;
  std::string targets = "non-punct";
  std::string aggregation = "pooled";
  std::string mask = "MaskFunction";
  bool check_rows = false;
};

void RunProbe(const ProbeCommandOptions& opts, const RunContext& ctx) {
  nlohmann::json& config = ctx.manifest->config();
  config["bundles"] = opts.bundles;
  config["targets"] = opts.targets;
  config["aggregation"] = opts.aggregation;
  config["mask"] = opts.mask;
  config["check_rows"] = opts.check_rows;

  ProbeOptions probe;
  probe.jobs = ctx.global.jobs;
  const auto targets = ParseTargetPolicy(opts.targets);
  if (!targets) throw InputError("unknown --targets " + opts.targets);
  probe.targets = *targets;
  probe.aggregation =
      opts.aggregation == "pooled" ? Aggregation::kPooled : Aggregation::kSentenceMean;
  const auto mask_mode = ParseMaskMode(opts.mask);
  if (!mask_mode) throw InputError("unknown --mask " + opts.mask);

  ctx.manifest->AddInput(opts.bundles);
  const std::vector<AttentionBundle> bundles = ReadBundleDirectory(opts.bundles);
  if (bundles.empty()) throw InputError(opts.bundles + ": manifest lists no bundles");
  if (opts.check_rows) {
    for (const AttentionBundle& b : bundles) {
      if (auto problem = ValidateBundle(b)) {
        throw InputError("bundle '" + b.sentence_id + "': " + *problem);
      }
    }
  }

  const DominanceResult result = DominantHeads(bundles, probe);

  std::ostringstream head_scores, dominant, histogram;
  head_scores << "subcategory,layer,head,score\n";
  dominant << "subcategory,layer,head,score,bundles,targets\n";
  for (const SubcategoryDominance& d : result.subcategories) {
    for (int l = 0; l < result.layers; ++l) {
      for (int h = 0; h < result.heads; ++h) {
        head_scores << d.subcategory << ',' << l << ',' << h << ','
                    << Fixed(d.head_scores[static_cast<std::size_t>(l) * result.heads + h])
                    << '\n';
      }
    }
    dominant << d.subcategory << ',' << d.layer << ',' << d.head << ',' << Fixed(d.score)
             << ',' << d.bundle_count << ',' << d.target_count << '\n';
  }
  histogram << "layer,head,subcategories\n";
  for (int l = 0; l < result.layers; ++l) {
    for (int h = 0; h < result.heads; ++h) {
      histogram << l << ',' << h << ','
                << result.histogram[static_cast<std::size_t>(l) * result.heads + h] << '\n';
    }
  }

  std::vector<AblationMask> masks;
  masks.reserve(bundles.size());
  for (const AttentionBundle& b : bundles) masks.push_back(BuildMask(b, *mask_mode));
  std::ostringstream masks_out;
  WriteMasks(masks_out, masks);

  ctx.WriteOutput("head_scores.csv", head_scores.str());
  ctx.WriteOutput("dominant_heads.csv", dominant.str());
  ctx.WriteOutput("histogram.csv", histogram.str());
  ctx.WriteOutput("masks.jsonl", masks_out.str());
  *ctx.log << "probe: " << bundles.size() << " bundle(s), " << result.subcategories.size()
           << " subcategories\n";
}

}  // namespace

CLI::App* RegisterProbe(CLI::App& root, CommandRunner* run) {
  auto opts = std::make_shared<ProbeCommandOptions>();
  CLI::App* cmd = root.add_subcommand(
      "probe", "Score attention heads for attachment to function words; write masks");
  cmd->add_option("--bundles", opts->bundles, "Attention bundle directory")->required();
  cmd->add_option("--targets", opts->targets, "non-punct, all or content")
      ->check(CLI::IsMember({"non-punct", "all", "content"}))
      ->capture_default_str();
  cmd->add_option("--aggregation", opts->aggregation, "pooled or sentence-mean")
      ->check(CLI::IsMember({"pooled", "sentence-mean"}))
      ->capture_default_str();
  cmd->add_option("--mask", opts->mask, "MaskFunction or None")
      ->check(CLI::IsMember({"MaskFunction", "None"}))
      ->capture_default_str();
  cmd->add_flag("--check-rows", opts->check_rows,
                "Require every attention row to sum to 1 (off for masked runs)");
  *run = [opts](const RunContext& ctx) { RunProbe(*opts, ctx); };
  return cmd;
}

}  // namespace funcword::cli
