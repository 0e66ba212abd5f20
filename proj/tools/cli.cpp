// Copyright 2026 The Scisumm Authors
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

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "scisumm/checkpoint.hpp"
#include "scisumm/corpus.hpp"
#include "scisumm/error.hpp"
#include "scisumm/rouge.hpp"
#include "scisumm/salience.hpp"
#include "scisumm/spans.hpp"
#include "scisumm/summarize.hpp"
#include "scisumm/util.hpp"

namespace scisumm::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string sha1_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha1(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 0xf]);
  }
  return out;
}

// Content hash in git blob style: sha1("blob <size>\0<content>").
std::string blob_hash(const std::string& content) {
  std::string blob = "blob " + std::to_string(content.size());
  blob.push_back('\0');
  blob += content;
  return sha1_hex(blob);
}

const char* command_name(Command command) {
  switch (command) {
    case Command::ingest: return "ingest";
    case Command::train: return "train";
    case Command::summarize: return "summarize";
    case Command::evaluate: return "evaluate";
    case Command::spans: return "spans";
    case Command::grad_check: return "grad-check";
  }
  return "unknown";
}

json config_to_json(const RunConfig& config) {
  json j;
  j["corpus"] = config.corpus_dir;
  j["out"] = config.out_dir;
  j["checkpoint"] = config.checkpoint_path;
  j["summaries"] = config.summaries_dir;
  j["embeddings"] = config.embeddings_path;
  j["exclude"] = config.exclude_path;
  j["seed"] = config.seed;
  j["jobs"] = config.jobs;
  j["authority"] = config.use_authority ? "on" : "off";
  j["mode"] = config.mode;
  j["limit"] = config.effective_word_limit();
  j["citation_limit"] = config.citation_limit;
  j["lr"] = config.learning_rate;
  j["batch_size"] = config.batch_size;
  j["clip_norm"] = config.clip_norm;
  j["dropout"] = config.dropout;
  j["patience"] = config.patience;
  j["max_epochs"] = config.max_epochs;
  return j;
}

// Every run leaves a manifest naming the command, the full configuration and
// the content hash of every input file, enough to re-run it identically.
void write_manifest(Command command, const RunConfig& config,
                    const std::map<std::string, std::string>& input_hashes) {
  json manifest;
  manifest["command"] = command_name(command);
  manifest["config"] = config_to_json(config);
  manifest["inputs"] = input_hashes;
  util::write_file(fs::path(config.out_dir) / "manifest.json",
                   manifest.dump(2) + "\n");
}

std::map<std::string, std::string> hash_dir(const fs::path& dir,
                                            const std::string& extension) {
  std::map<std::string, std::string> hashes;
  for (const auto& file : util::list_files(dir, extension)) {
    hashes[file.string()] = blob_hash(util::read_file(file));
  }
  return hashes;
}

// Paper records live either directly in the corpus directory or in its
// papers/ subdirectory (the ingest cache layout).
fs::path resolve_papers_dir(const std::string& corpus_dir) {
  fs::path dir(corpus_dir);
  if (fs::is_directory(dir / "papers")) return dir / "papers";
  return dir;
}

std::set<std::string> load_exclusions(const std::string& path) {
  std::set<std::string> ids;
  if (path.empty()) return ids;
  std::istringstream in(util::read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string id = util::trim(line);
    if (!id.empty()) ids.insert(id);
  }
  return ids;
}

struct PreparedDoc {
  spans::InputSet input;
  spans::SentenceGraph graph;
  std::vector<std::string> gold;  // empty when absent
};

PreparedDoc prepare_doc(const corpus::ReferencePaper& paper) {
  PreparedDoc doc;
  doc.input = spans::build_input_set(paper);
  doc.input.authority = spans::authority_scores(doc.input, paper);
  doc.graph = spans::build_graph(doc.input);
  if (paper.gold_summary) doc.gold = *paper.gold_summary;
  return doc;
}

json checkpoint_config_json(const RunConfig& config) {
  json j;
  j["seed"] = config.seed;
  j["use_authority"] = config.use_authority;
  j["embed_dim"] = neural::ModelParams::kEmbedDim;
  j["hidden_dim"] = neural::ModelParams::kHiddenDim;
  j["node_dim"] = neural::ModelParams::kNodeDim;
  j["lr"] = config.learning_rate;
  j["batch_size"] = config.batch_size;
  j["clip_norm"] = config.clip_norm;
  j["dropout"] = config.dropout;
  j["patience"] = config.patience;
  j["max_epochs"] = config.max_epochs;
  return j;
}

int cmd_ingest(const RunConfig& config) {
  auto files = util::list_files(resolve_papers_dir(config.corpus_dir), ".json");
  if (files.empty()) {
    throw Error(errc::io_error, "no .json records in " + config.corpus_dir);
  }
  std::vector<corpus::ReferencePaper> papers(files.size());
  util::parallel_for(files.size(), config.jobs, [&](std::size_t i) {
    papers[i] = corpus::load_paper(files[i]);
  });

  // Citation sampling is sequential in filename order so the draw sequence
  // depends only on the seed and the input set.
  Rng rng = make_rng(config.seed);
  for (auto& paper : papers) {
    paper.citations =
        corpus::sample_citations(paper.citations, config.citation_limit, rng);
  }

  corpus::Splits splits = corpus::make_splits(
      papers, load_exclusions(config.exclude_path), config.seed);

  fs::path out(config.out_dir);
  for (const auto& paper : papers) {
    util::write_file(out / "papers" / (paper.paper_id + ".json"),
                     corpus::serialize_paper(paper));
  }
  json splits_json;
  splits_json["train"] = splits.train;
  splits_json["validation"] = splits.validation;
  util::write_file(out / "splits.json", splits_json.dump(2) + "\n");

  std::map<std::string, std::string> hashes;
  for (std::size_t i = 0; i < files.size(); ++i) {
    hashes[files[i].string()] = blob_hash(util::read_file(files[i]));
  }
  write_manifest(Command::ingest, config, hashes);
  std::cout << "ingested " << papers.size() << " papers (" << splits.train.size()
            << " train / " << splits.validation.size() << " validation)\n";
  return 0;
}

corpus::Splits load_or_make_splits(const RunConfig& config,
                                   const std::vector<corpus::ReferencePaper>& papers) {
  fs::path splits_file = fs::path(config.corpus_dir) / "splits.json";
  if (fs::is_regular_file(splits_file)) {
    json j = json::parse(util::read_file(splits_file));
    corpus::Splits splits;
    splits.train = j.at("train").get<std::vector<std::string>>();
    splits.validation = j.at("validation").get<std::vector<std::string>>();
    return splits;
  }
  return corpus::make_splits(papers, load_exclusions(config.exclude_path),
                             config.seed);
}

int cmd_train(const RunConfig& config) {
  fs::path papers_dir = resolve_papers_dir(config.corpus_dir);
  auto papers = corpus::load_corpus_dir(papers_dir);
  corpus::Splits splits = load_or_make_splits(config, papers);

  std::map<std::string, const corpus::ReferencePaper*> by_id;
  for (const auto& paper : papers) by_id[paper.paper_id] = &paper;

  auto collect = [&](const std::vector<std::string>& ids,
                     const char* split_name) {
    std::vector<const corpus::ReferencePaper*> out;
    for (const auto& id : ids) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw Error(errc::key_mismatch,
                    std::string(split_name) + " split names unknown paper " + id);
      }
      if (!it->second->gold_summary) {
        std::cerr << "warning: skipping " << id << " (" << split_name
                  << "): no gold summary\n";
        continue;
      }
      out.push_back(it->second);
    }
    return out;
  };
  auto train_papers = collect(splits.train, "train");
  auto val_papers = collect(splits.validation, "validation");
  if (train_papers.empty() || val_papers.empty()) {
    throw Error(errc::empty_corpus_after_exclusion,
                "train/validation split has no usable (gold-bearing) papers");
  }

  // Per-document feature preparation is pure and parallel.
  std::vector<PreparedDoc> train_prep(train_papers.size());
  std::vector<PreparedDoc> val_prep(val_papers.size());
  util::parallel_for(train_papers.size(), config.jobs, [&](std::size_t i) {
    train_prep[i] = prepare_doc(*train_papers[i]);
  });
  util::parallel_for(val_papers.size(), config.jobs, [&](std::size_t i) {
    val_prep[i] = prepare_doc(*val_papers[i]);
  });

  std::vector<spans::InputSet> train_inputs;
  for (const auto& doc : train_prep) train_inputs.push_back(doc.input);
  salience::Vocab vocab = salience::build_vocab(train_inputs);

  auto encode_all = [&](const std::vector<PreparedDoc>& prep) {
    std::vector<salience::EncodedDoc> docs(prep.size());
    util::parallel_for(prep.size(), config.jobs, [&](std::size_t i) {
      docs[i] = salience::encode_doc(
          prep[i].input, prep[i].graph, vocab,
          salience::build_targets(prep[i].input, prep[i].gold));
    });
    return docs;
  };
  auto train_docs = encode_all(train_prep);
  auto val_docs = encode_all(val_prep);

  salience::TrainConfig tc;
  tc.seed = config.seed;
  tc.max_epochs = config.max_epochs;
  tc.patience = config.patience;
  tc.batch_size = config.batch_size;
  tc.learning_rate = config.learning_rate;
  tc.clip_norm = config.clip_norm;
  tc.dropout = config.dropout;
  tc.use_authority = config.use_authority;

  const salience::EmbeddingTable* pretrained = nullptr;
  salience::EmbeddingTable table;
  if (!config.embeddings_path.empty()) {
    table = salience::load_embeddings(config.embeddings_path);
    pretrained = &table;
  }
  neural::ModelParams initial =
      salience::init_params(vocab, config.seed, pretrained);
  salience::TrainResult result =
      salience::train(train_docs, val_docs, vocab.size(), tc, &initial);

  fs::path out(config.out_dir);
  neural::Checkpoint ckpt;
  ckpt.config_json = checkpoint_config_json(config).dump();
  ckpt.strings = vocab.tokens;
  for (auto& [name, tensor] : result.params.named_tensors()) {
    neural::Tensor clean;
    clean.shape = tensor->shape;
    clean.values = tensor->values;
    ckpt.tensors.emplace_back(name, std::move(clean));
  }
  neural::save_checkpoint(out / "checkpoint.bin", ckpt);
  util::write_file(out / "training_log.csv",
                   salience::training_log_csv(result.log));

  auto hashes = hash_dir(papers_dir, ".json");
  if (!config.embeddings_path.empty()) {
    hashes[config.embeddings_path] =
        blob_hash(util::read_file(config.embeddings_path));
  }
  write_manifest(Command::train, config, hashes);
  std::cout << "trained on " << train_docs.size() << " papers, best epoch "
            << result.best_epoch << " (val loss "
            << util::fmt_fixed(result.best_val_loss, 6) << ")\n";
  return 0;
}

struct LoadedModel {
  neural::ModelParams params = neural::ModelParams::create(1);
  salience::Vocab vocab;
  bool use_authority = true;
};

LoadedModel load_model(const std::string& path) {
  neural::Checkpoint ckpt = neural::load_checkpoint(path);
  LoadedModel model;
  json config = json::parse(ckpt.config_json);
  model.use_authority = config.value("use_authority", true);

  model.vocab.tokens = ckpt.strings;
  for (std::size_t i = 0; i < model.vocab.tokens.size(); ++i) {
    model.vocab.index[model.vocab.tokens[i]] = static_cast<int>(i);
  }

  model.params = neural::ModelParams::create(model.vocab.size());
  std::map<std::string, neural::Tensor*> by_name;
  for (auto& [name, tensor] : model.params.named_tensors()) {
    by_name[name] = tensor;
  }
  for (const auto& [name, tensor] : ckpt.tensors) {
    auto it = by_name.find(name);
    if (it == by_name.end()) {
      throw Error(errc::io_error, "checkpoint has unknown tensor " + name);
    }
    if (tensor.shape != it->second->shape) {
      throw Error(errc::shape_mismatch,
                  "checkpoint tensor " + name + " has unexpected shape");
    }
    it->second->values = tensor.values;
    by_name.erase(it);
  }
  if (!by_name.empty()) {
    throw Error(errc::io_error,
                "checkpoint is missing tensor " + by_name.begin()->first);
  }
  return model;
}

int cmd_summarize(const RunConfig& config) {
  LoadedModel model = load_model(config.checkpoint_path);
  bool use_authority =
      config.authority_explicit ? config.use_authority : model.use_authority;

  fs::path papers_dir = resolve_papers_dir(config.corpus_dir);
  auto papers = corpus::load_corpus_dir(papers_dir);
  if (papers.empty()) {
    throw Error(errc::io_error, "no papers in " + config.corpus_dir);
  }
  summarize::Mode mode = summarize::mode_from_name(config.mode);
  int limit = config.effective_word_limit();

  std::vector<std::string> outputs(papers.size());
  util::parallel_for(papers.size(), config.jobs, [&](std::size_t i) {
    PreparedDoc prep = prepare_doc(papers[i]);
    salience::EncodedDoc doc =
        salience::encode_doc(prep.input, prep.graph, model.vocab);
    salience::SalienceDistribution scores =
        salience::predict(doc, model.params, use_authority);
    summarize::Summary summary =
        summarize::make_summary(mode, prep.input, scores, limit);
    outputs[i] = summarize::summary_to_text(summary);
  });

  fs::path out(config.out_dir);
  for (std::size_t i = 0; i < papers.size(); ++i) {
    util::write_file(out / (papers[i].paper_id + ".txt"), outputs[i]);
  }

  auto hashes = hash_dir(papers_dir, ".json");
  hashes[config.checkpoint_path] =
      blob_hash(util::read_file(config.checkpoint_path));
  write_manifest(Command::summarize, config, hashes);
  std::cout << "wrote " << papers.size() << " summaries (" << config.mode
            << ", limit " << limit << ")\n";
  return 0;
}

int cmd_evaluate(const RunConfig& config) {
  fs::path papers_dir = resolve_papers_dir(config.corpus_dir);
  auto papers = corpus::load_corpus_dir(papers_dir);
  std::map<std::string, std::vector<std::string>> gold;
  for (const auto& paper : papers) {
    if (!paper.gold_summary) continue;
    std::string joined;
    for (const auto& s : *paper.gold_summary) {
      if (!joined.empty()) joined += ' ';
      joined += s;
    }
    gold[paper.paper_id] = {joined};
  }

  std::map<std::string, std::string> system;
  for (const auto& file : util::list_files(config.summaries_dir, ".txt")) {
    std::string joined;
    for (const auto& s :
         summarize::summary_sentences_from_text(util::read_file(file))) {
      if (!joined.empty()) joined += ' ';
      joined += s;
    }
    system[file.stem().string()] = joined;
  }

  rouge::BenchmarkResult result = rouge::evaluate_benchmark(system, gold);
  util::write_file(fs::path(config.out_dir) / "rouge.csv",
                   rouge::benchmark_csv(result));

  auto hashes = hash_dir(config.summaries_dir, ".txt");
  auto corpus_hashes = hash_dir(papers_dir, ".json");
  hashes.insert(corpus_hashes.begin(), corpus_hashes.end());
  write_manifest(Command::evaluate, config, hashes);
  std::cout << "mean 2-R " << util::fmt_fixed(result.mean.r2_recall, 4)
            << ", 2-F " << util::fmt_fixed(result.mean.r2_f1, 4) << ", 3-F "
            << util::fmt_fixed(result.mean.r3_f1, 4) << ", SU4-F "
            << util::fmt_fixed(result.mean.su4_f1, 4) << " over "
            << result.rows.size() << " papers\n";
  return 0;
}

int cmd_spans(const RunConfig& config) {
  fs::path papers_dir = resolve_papers_dir(config.corpus_dir);
  auto papers = corpus::load_corpus_dir(papers_dir);
  fs::path out(config.out_dir);
  std::vector<std::pair<std::string, std::string>> files(papers.size());
  util::parallel_for(papers.size(), config.jobs, [&](std::size_t i) {
    PreparedDoc prep = prepare_doc(papers[i]);
    std::ostringstream members;
    for (std::size_t m = 0; m < prep.input.members.size(); ++m) {
      const auto& member = prep.input.members[m];
      members << member.sid << '\t' << (member.is_abstract ? "A" : "-")
              << (member.is_cited_span ? "S" : "-") << '\t'
              << util::fmt_fixed(prep.input.authority[m], 4) << '\t'
              << member.text << '\n';
    }
    std::ostringstream graph;
    for (std::size_t a = 0; a < prep.graph.n; ++a) {
      for (std::size_t b = a + 1; b < prep.graph.n; ++b) {
        double w = prep.graph.weight(a, b);
        if (w > 0.0) {
          graph << prep.input.members[a].sid << ' '
                << prep.input.members[b].sid << ' ' << util::fmt_fixed(w, 6)
                << '\n';
        }
      }
    }
    files[i] = {members.str(), graph.str()};
  });
  for (std::size_t i = 0; i < papers.size(); ++i) {
    util::write_file(out / (papers[i].paper_id + ".inputset.txt"),
                     files[i].first);
    util::write_file(out / (papers[i].paper_id + ".graph.txt"),
                     files[i].second);
  }
  write_manifest(Command::spans, config, hash_dir(papers_dir, ".json"));
  std::cout << "wrote input sets and graphs for " << papers.size()
            << " papers\n";
  return 0;
}

// Small end-to-end derivative check on a synthetic document; the toy target
// threshold matches the unit and acceptance gates.
int cmd_grad_check(const RunConfig& config) {
  std::vector<spans::InputSet> inputs;
  spans::InputSet input;
  input.rp_id = "toy";
  input.members = {
      {0, "graph networks encode sentence structure", true, false},
      {1, "salience scores rank the cited spans", false, true},
      {2, "targets come from overlap with gold", false, true},
  };
  input.authority = {0.3, 0.9, 0.5};
  inputs.push_back(input);

  salience::Vocab vocab = salience::build_vocab(inputs);
  spans::SentenceGraph graph = spans::build_graph(input);
  salience::EncodedDoc doc = salience::encode_doc(
      input, graph, vocab,
      salience::build_targets(input, {"cited spans rank sentence structure"}));

  neural::ModelParams params = salience::init_params(vocab, config.seed);
  params.track_all();
  params.zero_grads();
  Rng rng = make_rng(config.seed);
  salience::forward_backward(doc, params, true, 0.0, false, rng, 1.0);
  auto loss_fn = [&] {
    return salience::loss(salience::predict(doc, params, true), doc.target);
  };
  double err =
      neural::grad_check(params.tensors(), loss_fn, 1e-5, 40, config.seed);
  std::cout << "max relative gradient error: " << err << "\n";
  return err < 1e-4 ? 0 : 1;
}

}  // namespace

ParsedArgs parse_args(const std::vector<std::string>& argv) {
  ParsedArgs parsed;
  RunConfig& config = parsed.config;

  CLI::App app{"hybrid content-impact summarization of scientific papers"};
  app.require_subcommand(1);

  bool authority_on = true;
  std::map<CLI::App*, Command> commands;
  auto add_command = [&](const char* name, const char* desc, Command command) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    commands[cmd] = command;
    cmd->set_config("--config", "", "key=value config file; flags win");
    cmd->add_option("--seed", config.seed, "random seed");
    cmd->add_option("--jobs", config.jobs, "worker threads for per-paper stages")
        ->check(CLI::Range(std::size_t{1}, std::size_t{256}));
    return cmd;
  };
  auto add_corpus = [&](CLI::App* cmd, bool required) {
    auto* opt = cmd->add_option("--corpus", config.corpus_dir,
                                "corpus directory (env SCISUMM_DATA)")
                    ->envname("SCISUMM_DATA")
                    ->check(CLI::ExistingDirectory);
    if (required) opt->required();
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", config.out_dir, "output directory")->required();
  };
  auto add_authority = [&](CLI::App* cmd) {
    return cmd->add_option("--authority", authority_on,
                           "use the authority feature (on|off)")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, bool>{{"on", true}, {"off", false}}));
  };

  CLI::App* ingest = add_command(
      "ingest", "validate records, sample citations, write cache and splits",
      Command::ingest);
  add_corpus(ingest, true);
  add_out(ingest);
  ingest->add_option("--exclude", config.exclude_path,
                     "file of paper ids to keep out of the splits")
      ->check(CLI::ExistingFile);
  ingest->add_option("--citation-limit", config.citation_limit,
                     "citations retained per paper")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1000}));

  CLI::App* train = add_command("train", "train the salience model",
                                Command::train);
  add_corpus(train, true);
  add_out(train);
  train->add_option("--embeddings", config.embeddings_path,
                    "pretrained embedding file (token + 100 floats per line)")
      ->check(CLI::ExistingFile);
  train->add_option("--exclude", config.exclude_path,
                    "file of paper ids to keep out of the splits")
      ->check(CLI::ExistingFile);
  add_authority(train);
  train->add_option("--lr", config.learning_rate, "Adam learning rate")
      ->check(CLI::PositiveNumber);
  train->add_option("--batch-size", config.batch_size,
                    "documents per accumulated gradient step")
      ->check(CLI::Range(1, 4096));
  train->add_option("--clip-norm", config.clip_norm, "global gradient norm cap")
      ->check(CLI::PositiveNumber);
  train->add_option("--dropout", config.dropout, "dropout rate")
      ->check(CLI::Range(0.0, 0.999));
  train->add_option("--patience", config.patience,
                    "epochs without validation improvement before stopping")
      ->check(CLI::Range(1, 100000));
  train->add_option("--max-epochs", config.max_epochs, "epoch cap")
      ->check(CLI::Range(1, 1000000));

  CLI::App* summ = add_command("summarize", "generate summaries",
                               Command::summarize);
  add_corpus(summ, true);
  add_out(summ);
  summ->add_option("--checkpoint", config.checkpoint_path, "trained model")
      ->required()
      ->check(CLI::ExistingFile);
  summ->add_option("--mode", config.mode, "hybrid1|hybrid2|cited")
      ->check(CLI::IsMember({"hybrid1", "hybrid2", "cited"}));
  summ->add_option("--limit", config.word_limit,
                   "word budget (default 150; 250 for cited)")
      ->check(CLI::Range(0, 100000));
  auto* authority_opt = add_authority(summ);

  CLI::App* eval = add_command("evaluate", "score summaries against gold",
                               Command::evaluate);
  add_corpus(eval, true);
  add_out(eval);
  eval->add_option("--summaries", config.summaries_dir,
                   "directory of summary .txt files")
      ->required()
      ->check(CLI::ExistingDirectory);

  CLI::App* spans_cmd = add_command(
      "spans", "emit input sets and sentence graphs for inspection",
      Command::spans);
  add_corpus(spans_cmd, true);
  add_out(spans_cmd);

  add_command("grad-check", "gradient diagnostics on a toy model",
              Command::grad_check);

  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.help_requested = true;
    std::cout << app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    throw Error(errc::usage_error, e.what());
  }

  CLI::App* chosen = app.get_subcommands().front();
  parsed.command = commands.at(chosen);
  config.use_authority = authority_on;
  config.authority_explicit = authority_opt->count() > 0;
  return parsed;
}

int run_pipeline(Command command, const RunConfig& config) {
  if (command != Command::grad_check && config.out_dir.empty()) {
    throw Error(errc::usage_error, "--out is required");
  }
  switch (command) {
    case Command::ingest: return cmd_ingest(config);
    case Command::train: return cmd_train(config);
    case Command::summarize: return cmd_summarize(config, false);
    case Command::evaluate: return cmd_evaluate(config);
    case Command::spans: return cmd_spans(config);
    case Command::grad_check: return cmd_grad_check(config);
  }
  throw Error(errc::usage_error, "unknown command");
}

int main(const std::vector<std::string>& argv) {
  try {
    ParsedArgs parsed = parse_args(argv);
    if (parsed.help_requested) return 0;
    return run_pipeline(parsed.command, parsed.config);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == errc::usage_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace scisumm::cli
