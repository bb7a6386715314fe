// Copyright 2026 The oovfst Authors.
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

#include "oovfst/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "oovfst/bpe.h"
#include "oovfst/dataset_split.h"
#include "oovfst/error.h"
#include "oovfst/fst_io.h"
#include "oovfst/fst_ops.h"
#include "oovfst/hclg.h"
#include "oovfst/lexicon.h"
#include "oovfst/metrics.h"
#include "oovfst/ngram_g.h"
#include "oovfst/text_util.h"

namespace oovfst {
namespace {

struct Options {
  std::string config;

  std::string lexicon, oov_lexicon, oov_list;
  std::string l, g, hclg, fst, a, b;
  std::string phone_syms, word_syms, isyms, msyms, osyms;
  std::string histories, arpa, phone_lm, phone_arpa, bpe_model;
  std::string transition_model, text, word_counts, in, input, unk_symbol;
  std::string ref, hyp, manifest, vocab, out_dir;
  std::string out, out_l, out_g, out_phone_syms, out_word_syms;
  std::string out_histories, out_transition_model, out_lexicon;

  bool add_unk = false;
  bool json = false;
  bool no_normalize = false;
  double penalty = 2.3;
  double discount = 0.5;
  double boost_cost = 0.1;
  double self_loop_prob = 1.0;
  int num_merges = kDefaultNumMerges;
};

class Logger {
 public:
  explicit Logger(std::ostream &err) : err_(err) {
    if (const char *v = std::getenv(kLogLevelEnv)) level_ = std::atoi(v);
  }
  void Info(const std::string &msg) const {
    if (level_ >= 1) err_ << "oovtool: " << msg << '\n';
  }

 private:
  std::ostream &err_;
  int level_ = 0;
};

std::ifstream OpenInput(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  return is;
}

// Writes into a sibling temp file and renames it over `path`.
void WriteAtomically(const std::string &path,
                     const std::function<void(std::ostream &)> &write) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot write " + path);
    write(os);
    os.flush();
    if (!os) {
      os.close();
      fs::remove(tmp);
      throw Error("cannot write " + path);
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw Error("cannot write " + path);
  }
}

void WriteFst(const std::string &path, const Fst &fst, const SymbolTable *isyms,
              const SymbolTable *osyms) {
  WriteAtomically(path, [&](std::ostream &os) {
    WriteFstText(os, fst, isyms, osyms);
  });
}

void WriteSymbols(const std::string &path, const SymbolTable &syms) {
  WriteAtomically(path, [&](std::ostream &os) { syms.WriteText(os); });
}

SymbolTable ReadSymbols(const std::string &path) {
  return SymbolTable::ReadTextFile(path);
}

std::vector<std::string> ReadWordList(const std::string &path) {
  auto is = OpenInput(path);
  std::vector<std::string> words;
  std::set<std::string> seen;
  std::string line;
  while (std::getline(is, line)) {
    auto fields = SplitWhitespace(line);
    if (fields.empty()) continue;
    if (seen.insert(fields[0]).second) words.push_back(fields[0]);
  }
  return words;
}

LGraph LoadL(const Options &o) {
  SymbolTable phones = ReadSymbols(o.phone_syms);
  SymbolTable words = ReadSymbols(o.word_syms);
  Fst fst = ReadFstTextFile(o.l, &phones, &words);
  return LGraph::FromFst(std::move(fst), std::move(phones), std::move(words));
}

// G without its history side file; enough for [unk] replacement and
// composition.
GGraph LoadBareG(const std::string &path, SymbolTable words) {
  GGraph g;
  g.fst = ReadFstTextFile(path, &words, &words);
  if (auto b = words.Find(kBackoffSymbol)) g.backoff_label = *b;
  g.word_syms = std::move(words);
  return g;
}

void WriteL(const Options &o, const LGraph &l, const std::string &out) {
  WriteFst(out, l.fst, &l.phone_syms, &l.word_syms);
  WriteSymbols(o.out_phone_syms, l.phone_syms);
  WriteSymbols(o.out_word_syms, l.word_syms);
}

// Moves every label of `fst` from `from` to `to` by symbol name.
Fst Relabel(const Fst &fst, const SymbolTable &from, const SymbolTable &to) {
  Fst out = fst;
  for (StateId s = 0; s < out.NumStates(); ++s) {
    for (Arc &a : out.MutableArcs(s)) {
      a.ilabel = to.Lookup(from.Symbol(a.ilabel));
      a.olabel = to.Lookup(from.Symbol(a.olabel));
    }
  }
  return out;
}

void RunBuildL(const Options &o, std::ostream &, const Logger &log) {
  LGraph l = BuildL(ParseLexiconFile(o.lexicon), o.add_unk);
  WriteL(o, l, o.out);
  log.Info("L: " + std::to_string(l.fst.NumStates()) + " states, " +
           std::to_string(l.fst.NumArcs()) + " arcs");
}

void RunAddWords(const Options &o, std::ostream &, const Logger &log) {
  LGraph l = AddWordsToL(LoadL(o), ParseLexiconFile(o.oov_lexicon));
  WriteL(o, l, o.out);
  log.Info("L: " + std::to_string(l.fst.NumStates()) + " states");
}

void RunSpliceUnkLm(const Options &o, std::ostream &, const Logger &log) {
  LGraph l = LoadL(o);
  Fst p;
  if (!o.phone_arpa.empty()) {
    GGraph pg = ArpaToG(ParseArpaFile(o.phone_arpa), SymbolTable());
    p = Relabel(pg.fst, pg.word_syms, l.phone_syms);
  } else if (!o.phone_lm.empty()) {
    p = ReadFstTextFile(o.phone_lm, &l.phone_syms, &l.phone_syms);
  } else {
    throw CLI::ValidationError("splice-unk-lm needs --phone-lm or --phone-arpa");
  }
  l = SpliceUnkLm(std::move(l), p);
  WriteL(o, l, o.out);
  log.Info("spliced phone LM with " + std::to_string(p.NumStates()) +
           " states");
}

void RunBuildG(const Options &o, std::ostream &, const Logger &log) {
  SymbolTable seed;
  if (!o.word_syms.empty()) seed = ReadSymbols(o.word_syms);
  GGraph g = ArpaToG(ParseArpaFile(o.arpa), std::move(seed));
  WriteFst(o.out, g.fst, &g.word_syms, &g.word_syms);
  WriteSymbols(o.out_word_syms, g.word_syms);
  if (!o.out_histories.empty()) {
    WriteAtomically(o.out_histories,
                    [&](std::ostream &os) { WriteGHistories(os, g); });
  }
  log.Info("G: " + std::to_string(g.fst.NumStates()) + " states");
}

void RunModLg(const Options &o, std::ostream &, const Logger &log) {
  BiasConfig cfg;
  cfg.penalty = o.penalty;
  Lexicon oov = ParseLexiconFile(o.oov_lexicon);
  LGraph l = AddWordsToL(LoadL(o), oov);
  GGraph g = LoadBareG(o.g, l.word_syms);
  g = ReplaceUnkInG(std::move(g), oov.Words(), cfg);
  WriteFst(o.out_l, l.fst, &l.phone_syms, &g.word_syms);
  WriteFst(o.out_g, g.fst, &g.word_syms, &g.word_syms);
  WriteSymbols(o.out_phone_syms, l.phone_syms);
  WriteSymbols(o.out_word_syms, g.word_syms);
  log.Info("added " + std::to_string(oov.size()) + " pronunciations");
}

void RunModG(const Options &o, std::ostream &out, const Logger &) {
  BiasConfig cfg;
  cfg.discount = o.discount;
  cfg.boost_cost = o.boost_cost;
  SymbolTable words = ReadSymbols(o.word_syms);
  Fst fst = ReadFstTextFile(o.g, &words, &words);
  auto hist = OpenInput(o.histories);
  GGraph g = ReadGHistories(hist, std::move(fst), std::move(words));
  BpeModel bpe = BpeModel::ReadFile(o.bpe_model);
  ModGReport report;
  g = ModGSubwords(std::move(g), ReadWordList(o.oov_list), bpe, cfg, &report);
  WriteFst(o.out, g.fst, &g.word_syms, &g.word_syms);
  WriteSymbols(o.out_word_syms, g.word_syms);
  WriteAtomically(o.out_histories,
                  [&](std::ostream &os) { WriteGHistories(os, g); });
  out << "arcs_discounted " << report.arcs_discounted << '\n'
      << "arcs_added " << report.arcs_added << '\n'
      << "states_added " << report.states_added << '\n';
  for (const auto &w : report.skipped) out << "skipped " << w << '\n';
}

void RunBpeTrain(const Options &o, std::ostream &, const Logger &log) {
  WordCounts counts;
  if (!o.word_counts.empty()) {
    auto is = OpenInput(o.word_counts);
    counts = ReadWordCounts(is);
  } else if (!o.text.empty()) {
    auto is = OpenInput(o.text);
    counts = CountWords(is);
  } else {
    throw CLI::ValidationError("bpe-train needs --text or --word-counts");
  }
  BpeModel model = TrainBpe(counts, o.num_merges);
  WriteAtomically(o.out, [&](std::ostream &os) { model.Write(os); });
  log.Info("learned " + std::to_string(model.merges().size()) + " merges");
}

void RunBpeApply(const Options &o, std::ostream &out, const Logger &) {
  BpeModel model = BpeModel::ReadFile(o.bpe_model);
  auto is = OpenInput(o.in);
  std::ostringstream tokenized;
  std::vector<std::string> all_tokens;
  std::string line;
  while (std::getline(is, line)) {
    std::vector<std::string> toks;
    for (const auto &w : SplitWhitespace(line)) {
      for (auto &t : model.Tokenize(w)) toks.push_back(std::move(t));
    }
    tokenized << Join(toks, " ") << '\n';
    all_tokens.insert(all_tokens.end(), toks.begin(), toks.end());
  }
  if (o.out.empty()) {
    out << tokenized.str();
  } else {
    WriteAtomically(o.out, [&](std::ostream &os) { os << tokenized.str(); });
  }
  if (!o.out_lexicon.empty()) {
    Lexicon lex = CharacterLexicon(all_tokens, model.marker());
    WriteAtomically(o.out_lexicon,
                    [&](std::ostream &os) { WriteLexicon(os, lex); });
  }
}

void RunBuildHclg(const Options &o, std::ostream &, const Logger &log) {
  LGraph l = LoadL(o);
  GGraph g = LoadBareG(o.g, l.word_syms);
  TransitionModel tm =
      o.transition_model.empty()
          ? TransitionModel::ForPhones(l.phone_syms, o.self_loop_prob)
          : TransitionModel::ReadFile(o.transition_model);
  DecodingGraph dg = BuildHclg(l, g, tm);
  WriteFst(o.out, dg.fst, nullptr, &dg.word_syms);
  if (!o.out_transition_model.empty()) {
    WriteAtomically(o.out_transition_model,
                    [&](std::ostream &os) { dg.tm.Write(os); });
  }
  log.Info("HCLG: " + std::to_string(dg.fst.NumStates()) + " states, " +
           std::to_string(dg.fst.NumArcs()) + " arcs");
}

void RunModHclg(const Options &o, std::ostream &, const Logger &log) {
  BiasConfig cfg;
  cfg.penalty = o.penalty;
  DecodingGraph dg;
  dg.word_syms = ReadSymbols(o.word_syms);
  dg.fst = ReadFstTextFile(o.hclg, nullptr, &dg.word_syms);
  dg.tm = TransitionModel::ReadFile(o.transition_model);
  size_t before = dg.fst.NumStates();
  dg = ModHclg(std::move(dg), ParseLexiconFile(o.oov_lexicon), cfg);
  WriteFst(o.out, dg.fst, nullptr, &dg.word_syms);
  WriteSymbols(o.out_word_syms, dg.word_syms);
  log.Info("HCLG grew by " + std::to_string(dg.fst.NumStates() - before) +
           " states");
}

const SymbolTable *MaybeSymbols(const std::string &path,
                                std::optional<SymbolTable> *slot) {
  if (path.empty()) return nullptr;
  slot->emplace(ReadSymbols(path));
  return &**slot;
}

void RunCompose(const Options &o, std::ostream &, const Logger &log) {
  std::optional<SymbolTable> is, ms, os;
  const SymbolTable *isyms = MaybeSymbols(o.isyms, &is);
  const SymbolTable *msyms = MaybeSymbols(o.msyms, &ms);
  const SymbolTable *osyms = MaybeSymbols(o.osyms, &os);
  Fst a = ReadFstTextFile(o.a, isyms, msyms);
  Fst b = ReadFstTextFile(o.b, msyms, osyms);
  Fst c = Compose(a, b);
  WriteFst(o.out, c, isyms, osyms);
  log.Info("composed: " + std::to_string(c.NumStates()) + " states");
}

std::string LabelString(const std::vector<Label> &labels,
                        const SymbolTable *syms) {
  std::vector<std::string> parts;
  for (Label l : labels) {
    parts.push_back(syms ? syms->Symbol(l) : std::to_string(l));
  }
  return Join(parts, " ");
}

void RunShortestPath(const Options &o, std::ostream &out, const Logger &) {
  std::optional<SymbolTable> is, os;
  const SymbolTable *isyms = MaybeSymbols(o.isyms, &is);
  const SymbolTable *osyms = MaybeSymbols(o.osyms, &os);
  LinearPath path = ShortestPath(ReadFstTextFile(o.fst, isyms, osyms));
  out << "cost\t" << FormatWeight(path.total.Value()) << '\n'
      << "input\t" << LabelString(path.InputLabels(), isyms) << '\n'
      << "output\t" << LabelString(path.OutputLabels(), osyms) << '\n';
  if (!o.out.empty()) WriteFst(o.out, path.ToFst(), isyms, osyms);
}

void RunExtractUnk(const Options &o, std::ostream &out, const Logger &) {
  SymbolTable isyms = ReadSymbols(o.isyms);
  SymbolTable osyms = ReadSymbols(o.osyms);
  Fst fst = ReadFstTextFile(o.fst, &isyms, &osyms);
  if (!o.input.empty()) {
    std::vector<Label> labels;
    for (const auto &sym : SplitWhitespace(o.input)) {
      labels.push_back(isyms.Lookup(sym));
    }
    Fst acceptor = LinearAcceptor(labels);
    for (Label d : isyms.Labels()) {
      if (!isyms.IsDisambig(d)) continue;
      for (StateId s = 0; s < acceptor.NumStates(); ++s) {
        acceptor.AddArc(s, Arc(d, d, Weight::One(), s));
      }
    }
    fst = Compose(acceptor, fst);
  }
  LinearPath path = ShortestPath(fst);
  auto unk = osyms.Find(o.unk_symbol);
  if (!unk) throw Error("output symbols have no " + o.unk_symbol);
  for (const auto &span : ExtractUnkSpans(path, isyms, *unk)) {
    out << JoinSpan(span, isyms) << '\n';
  }
}

void RunScore(const Options &o, std::ostream &out, const Logger &) {
  auto ref_is = OpenInput(o.ref);
  auto hyp_is = OpenInput(o.hyp);
  std::set<std::string, std::less<>> oov;
  if (!o.oov_list.empty()) {
    for (auto &w : ReadWordList(o.oov_list)) oov.insert(std::move(w));
  }
  CorpusReport report =
      ScoreCorpus(ReadTranscripts(ref_is), ReadTranscripts(hyp_is), oov);
  std::string text;
  if (o.json) {
    text = CorpusReportToJson(report) + "\n";
  } else {
    std::ostringstream os;
    WriteCorpusSummary(os, report);
    text = os.str();
  }
  if (o.out.empty()) {
    out << text;
  } else {
    WriteAtomically(o.out, [&](std::ostream &os) { os << text; });
  }
}

void RunMakeSplit(const Options &o, std::ostream &out, const Logger &log) {
  namespace fs = std::filesystem;
  const bool normalize = !o.no_normalize;
  auto man = OpenInput(o.manifest);
  auto voc = OpenInput(o.vocab);
  SplitResult split = MakeSplit(ReadManifest(man, normalize),
                                ReadVocabulary(voc, normalize));
  std::error_code ec;
  fs::create_directories(o.out_dir, ec);
  if (ec) throw Error("cannot create " + o.out_dir);
  auto path = [&](const char *name) { return (fs::path(o.out_dir) / name).string(); };
  WriteAtomically(path("train.tsv"),
                  [&](std::ostream &os) { WriteManifest(os, split.train); });
  WriteAtomically(path("test.tsv"),
                  [&](std::ostream &os) { WriteManifest(os, split.test); });
  WriteAtomically(path("oov_words.txt"),
                  [&](std::ostream &os) { WriteOovWords(os, split); });
  WriteAtomically(path("stats.json"), [&](std::ostream &os) {
    os << SplitStatsJson(split) << '\n';
  });
  out << OovReport(split);
  log.Info("excluded " + std::to_string(split.excluded.size()) +
           " utterances by test speakers");
}

using Handler = void (*)(const Options &, std::ostream &, const Logger &);

struct Command {
  CLI::App *app;
  Handler handler;
};

std::map<std::string, std::string> ReadConfig(const std::string &path) {
  auto is = OpenInput(path);
  std::map<std::string, std::string> kv;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    std::string_view t = Trim(line);
    if (t.empty() || t.front() == '#') continue;
    auto eq = t.find('=');
    if (eq == std::string_view::npos) {
      throw CLI::ValidationError("config line " + std::to_string(lineno) +
                                 ": expected key=value");
    }
    kv[std::string(Trim(t.substr(0, eq)))] = std::string(Trim(t.substr(eq + 1)));
  }
  return kv;
}

bool HasFlag(const std::vector<std::string> &args, const std::string &flag) {
  for (const auto &a : args) {
    if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
  }
  return false;
}

std::string FindConfigPath(const std::vector<std::string> &args) {
  for (size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) return args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) return args[i].substr(9);
  }
  return "";
}

// Config values go right after the subcommand so that explicit flags,
// parsed later, win.
std::vector<std::string> ApplyConfig(std::vector<std::string> args,
                                     const CLI::App &app) {
  std::string path = FindConfigPath(args);
  if (path.empty() || args.empty()) return args;
  const CLI::App *sub = app.get_subcommand_no_throw(args[0]);
  if (sub == nullptr) return args;
  std::vector<std::string> injected;
  for (const auto &[key, value] : ReadConfig(path)) {
    const std::string flag = "--" + key;
    bool known = false;
    for (const CLI::App *other : app.get_subcommands({})) {
      if (other->get_option_no_throw(flag) != nullptr) known = true;
    }
    if (!known) throw CLI::ValidationError("unknown config key " + key);
    if (sub->get_option_no_throw(flag) == nullptr || HasFlag(args, flag)) {
      continue;
    }
    injected.push_back(flag + "=" + value);
  }
  args.insert(args.begin() + 1, injected.begin(), injected.end());
  return args;
}

void Register(CLI::App &app, Options &o, std::vector<Command> *commands) {
  auto add = [&](const char *name, const char *desc, Handler h) {
    CLI::App *sub = app.add_subcommand(name, desc);
    sub->add_option("--config", o.config, "key=value file; flags override it");
    commands->push_back({sub, h});
    return sub;
  };
  auto nonneg = CLI::NonNegativeNumber;

  auto *c = add("build-l", "Build L from a lexicon", RunBuildL);
  c->add_option("--lexicon", o.lexicon, "word p1 p2 ... per line")->required();
  c->add_flag("--add-unk", o.add_unk, "Add the jnk:[unk] pronunciation");
  c->add_option("--out", o.out, "L (text FST)")->required();
  c->add_option("--out-phone-syms", o.out_phone_syms)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();

  c = add("add-words", "Add OOV pronunciations to L", RunAddWords);
  c->add_option("--l", o.l)->required();
  c->add_option("--phone-syms", o.phone_syms)->required();
  c->add_option("--word-syms", o.word_syms)->required();
  c->add_option("--oov-lexicon", o.oov_lexicon)->required();
  c->add_option("--out", o.out)->required();
  c->add_option("--out-phone-syms", o.out_phone_syms)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();

  c = add("splice-unk-lm", "Replace jnk:[unk] in L with a phone LM",
          RunSpliceUnkLm);
  c->add_option("--l", o.l)->required();
  c->add_option("--phone-syms", o.phone_syms)->required();
  c->add_option("--word-syms", o.word_syms)->required();
  c->add_option("--phone-lm", o.phone_lm, "Phone acceptor (text FST)");
  c->add_option("--phone-arpa", o.phone_arpa, "Phone n-gram model (ARPA)");
  c->add_option("--out", o.out)->required();
  c->add_option("--out-phone-syms", o.out_phone_syms)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();

  c = add("build-g", "Build G from an ARPA model", RunBuildG);
  c->add_option("--arpa", o.arpa)->required();
  c->add_option("--word-syms", o.word_syms, "Word table to extend (e.g. L's)");
  c->add_option("--out", o.out)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();
  c->add_option("--out-histories", o.out_histories, "State history file");

  c = add("mod-lg", "Add OOV words to L and replace [unk] arcs in G",
          RunModLg);
  c->add_option("--l", o.l)->required();
  c->add_option("--g", o.g)->required();
  c->add_option("--phone-syms", o.phone_syms)->required();
  c->add_option("--word-syms", o.word_syms, "Table shared by L and G")
      ->required();
  c->add_option("--oov-lexicon", o.oov_lexicon)->required();
  c->add_option("--penalty", o.penalty, "Cost added to replaced arcs")
      ->check(nonneg);
  c->add_option("--out-l", o.out_l)->required();
  c->add_option("--out-g", o.out_g)->required();
  c->add_option("--out-phone-syms", o.out_phone_syms)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();

  c = add("mod-g", "Boost OOV subword sequences in a subword G", RunModG);
  c->add_option("--g", o.g)->required();
  c->add_option("--word-syms", o.word_syms)->required();
  c->add_option("--histories", o.histories)->required();
  c->add_option("--bpe-model", o.bpe_model)->required();
  c->add_option("--oov-list", o.oov_list, "One word per line")->required();
  c->add_option("--discount", o.discount)->check(nonneg);
  c->add_option("--boost-cost", o.boost_cost)->check(nonneg);
  c->add_option("--out", o.out)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();
  c->add_option("--out-histories", o.out_histories)->required();

  c = add("bpe-train", "Learn BPE merges", RunBpeTrain);
  c->add_option("--text", o.text, "Running text");
  c->add_option("--word-counts", o.word_counts, "word<TAB>count lines");
  c->add_option("--num-merges", o.num_merges)->check(nonneg);
  c->add_option("--out", o.out)->required();

  c = add("bpe-apply", "Tokenize text with a BPE model", RunBpeApply);
  c->add_option("--bpe-model", o.bpe_model)->required();
  c->add_option("--in", o.in)->required();
  c->add_option("--out", o.out, "Defaults to stdout");
  c->add_option("--out-lexicon", o.out_lexicon,
                "Character lexicon of the tokens seen");

  c = add("build-hclg", "Compose a monophone HCLG", RunBuildHclg);
  c->add_option("--l", o.l)->required();
  c->add_option("--g", o.g)->required();
  c->add_option("--phone-syms", o.phone_syms)->required();
  c->add_option("--word-syms", o.word_syms, "Table shared by L and G")
      ->required();
  c->add_option("--transition-model", o.transition_model,
                "phone<TAB>tid file; default: one id per phone");
  c->add_option("--self-loop-prob", o.self_loop_prob,
                "Used without --transition-model; 1 disables loops")
      ->check(CLI::Range(0.0, 1.0));
  c->add_option("--out", o.out)->required();
  c->add_option("--out-transition-model", o.out_transition_model);

  c = add("mod-hclg", "Insert an OOV HCL and reroute [unk] arcs", RunModHclg);
  c->add_option("--hclg", o.hclg)->required();
  c->add_option("--word-syms", o.word_syms)->required();
  c->add_option("--transition-model", o.transition_model)->required();
  c->add_option("--oov-lexicon", o.oov_lexicon)->required();
  c->add_option("--penalty", o.penalty)->check(nonneg);
  c->add_option("--out", o.out)->required();
  c->add_option("--out-word-syms", o.out_word_syms)->required();

  c = add("compose", "Compose two FSTs", RunCompose);
  c->add_option("--a", o.a)->required();
  c->add_option("--b", o.b)->required();
  c->add_option("--isyms", o.isyms, "Input table of a");
  c->add_option("--msyms", o.msyms, "Output table of a, input table of b");
  c->add_option("--osyms", o.osyms, "Output table of b");
  c->add_option("--out", o.out)->required();

  c = add("shortest-path", "Print the best path", RunShortestPath);
  c->add_option("--fst", o.fst)->required();
  c->add_option("--isyms", o.isyms);
  c->add_option("--osyms", o.osyms);
  c->add_option("--out", o.out, "Also write the path as an FST");

  c = add("extract-unk", "Print the phones recognized under [unk]",
          RunExtractUnk);
  c->add_option("--fst", o.fst, "L o G style graph")->required();
  c->add_option("--isyms", o.isyms)->required();
  c->add_option("--osyms", o.osyms)->required();
  c->add_option("--input", o.input, "Phone string to decode first");
  o.unk_symbol = std::string(kUnkWord);
  c->add_option("--unk-symbol", o.unk_symbol);

  c = add("score",
          "WER, CER and OOV-CER (CER and OOV-CER ignore spaces)", RunScore);
  c->add_option("--ref", o.ref, "utt_id<TAB>transcript lines")->required();
  c->add_option("--hyp", o.hyp, "utt_id<TAB>transcript lines")->required();
  c->add_option("--oov-list", o.oov_list);
  c->add_flag("--json", o.json);
  c->add_option("--out", o.out, "Defaults to stdout");

  c = add("make-split", "High-OOV train/test split", RunMakeSplit);
  c->add_option("--manifest", o.manifest,
                "utt_id<TAB>speaker<TAB>seconds<TAB>transcript")
      ->required();
  c->add_option("--vocab", o.vocab, "One word per line")->required();
  c->add_option("--out-dir", o.out_dir)->required();
  c->add_flag("--no-normalize", o.no_normalize,
              "Use transcripts and vocabulary verbatim");
}

}  // namespace

int Run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app("OOV-word tools for WFST decoding graphs", "oovtool");
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  Options o;
  std::vector<Command> commands;
  Register(app, o, &commands);
  Logger log(err);

  try {
    std::vector<std::string> full = ApplyConfig(args, app);
    std::vector<const char *> argv{"oovtool"};
    for (const auto &a : full) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
    for (const Command &cmd : commands) {
      if (cmd.app->parsed()) cmd.handler(o, out, log);
    }
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    err << "oovtool: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "oovtool: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int Run(const std::vector<std::string> &args) {
  return Run(args, std::cout, std::cerr);
}

}  // namespace oovfst
