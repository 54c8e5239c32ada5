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

// Writes the bundled sample data under data/: three synthetic treebanks with
// different word orders, a small English corpus for the CLI fixtures, and a
// toy minimal-pair suite with its CoNLL-U sidecar.
//
// The treebanks come from a seeded dependency grammar that follows UD
// attachment conventions (case and det on the noun, cc on the following
// conjunct, mark on the clause head, aux on the verb, punct on the root).
// They stand in for real UD data, which is not shipped with this project.
//
// Usage: make_samples <output data directory>

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "funcword/conllu.h"
#include "funcword/rng.h"
#include "funcword/treebank.h"
#include "funcword/upos.h"

namespace funcword {
namespace {

namespace fs = std::filesystem;

constexpr std::uint64_t kSeed = 20260315;

// Zipf-Mandelbrot sampler over a word list.
class Lexicon {
 public:
  Lexicon() = default;
  explicit Lexicon(std::vector<std::string> words) : words_(std::move(words)) {
    double total = 0.0;
    for (std::size_t r = 0; r < words_.size(); ++r) {
      total += 1.0 / (static_cast<double>(r) + 2.7);
      cumulative_.push_back(total);
    }
  }

  const std::string& Pick(Rng& rng) const {
    const double u = rng.Uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    if (it == cumulative_.end()) --it;
    return words_[static_cast<std::size_t>(it - cumulative_.begin())];
  }
  std::size_t size() const { return words_.size(); }
  const std::string& at(std::size_t i) const { return words_[i]; }

 private:
  std::vector<std::string> words_;
  std::vector<double> cumulative_;
};

// Tokens are built in a pool and ordered by concatenating phrases.
struct PoolToken {
  std::string form;
  Upos upos = Upos::kX;
  std::string deprel;
  int head = -1;  // pool id, -1 for root
};

struct Phrase {
  std::vector<int> order;
  int head = -1;
};

class Builder {
 public:
  int Add(std::string form, Upos upos) {
    pool_.push_back({std::move(form), upos, "", -1});
    return static_cast<int>(pool_.size()) - 1;
  }
  Phrase Word(std::string form, Upos upos) {
    const int id = Add(std::move(form), upos);
    return {{id}, id};
  }
  void Attach(int dep, int head, std::string deprel) {
    pool_[dep].head = head;
    pool_[dep].deprel = std::move(deprel);
  }
  // Concatenates the parts in order; `head` becomes the phrase head.
  static Phrase Cat(std::initializer_list<const Phrase*> parts, int head) {
    Phrase out;
    out.head = head;
    for (const Phrase* p : parts) {
      if (p) out.order.insert(out.order.end(), p->order.begin(), p->order.end());
    }
    return out;
  }

  Sentence Finish(const Phrase& root, const std::string& sent_id, bool capitalize) {
    std::vector<int> position(pool_.size(), 0);
    for (std::size_t k = 0; k < root.order.size(); ++k) {
      position[root.order[k]] = static_cast<int>(k) + 1;
    }
    std::vector<Token> tokens;
    std::string text;
    for (std::size_t k = 0; k < root.order.size(); ++k) {
      const PoolToken& p = pool_[root.order[k]];
      Token t;
      t.index = static_cast<int>(k) + 1;
      t.form = p.form;
      if (k == 0 && capitalize && !t.form.empty() && t.form[0] >= 'a' &&
          t.form[0] <= 'z') {
        t.form[0] = static_cast<char>(t.form[0] - 'a' + 'A');
      }
      t.lemma = p.form;
      t.upos = p.upos;
      t.head = p.head < 0 ? 0 : position[p.head];
      t.deprel = p.head < 0 ? "root" : p.deprel;
      if (!text.empty()) text += ' ';
      text += t.form;
      tokens.push_back(std::move(t));
    }
    pool_.clear();
    return Sentence(std::move(tokens), sent_id, text);
  }

 private:
  std::vector<PoolToken> pool_;
};

// ---------------------------------------------------------------------------
// Word lists.

const char* const kEnNouns[] = {
    "time", "year", "people", "way", "day", "man", "thing", "woman", "life",
    "child", "world", "school", "state", "family", "student", "group", "country",
    "problem", "hand", "part", "place", "case", "week", "company", "system",
    "program", "question", "work", "government", "number", "night", "point",
    "home", "water", "room", "mother", "area", "money", "story", "fact", "month",
    "lot", "right", "study", "book", "eye", "job", "word", "business", "issue",
    "side", "kind", "head", "house", "service", "friend", "father", "power",
    "hour", "game", "line", "end", "member", "law", "car", "city", "community",
    "name", "president", "team", "minute", "idea", "kid", "body", "information",
    "back", "parent", "face", "others", "level", "office", "door", "health",
    "person", "art", "war", "history", "party", "result", "change", "morning",
    "reason", "research", "girl", "guy", "moment", "air", "teacher", "force",
    "education", "dog", "garden", "river", "table", "letter", "window", "tree",
    "road", "bird", "horse", "ship", "song", "picture", "village", "market",
    "doctor", "king", "train", "field", "box", "cup", "hill", "bridge", "farmer",
    "artist", "cat", "boat", "forest", "island", "paper", "lake", "kitchen",
    "street", "camera", "museum", "library", "cousin", "neighbor", "engine",
    "planet", "storm", "report", "plan", "meal", "shop", "coat", "key", "wall",
    "student", "player", "singer", "worker", "driver", "lawyer", "nurse"};

const char* const kEnVerbs[] = {
    "see", "make", "take", "find", "give", "tell", "call", "keep", "leave",
    "show", "hear", "play", "move", "like", "hold", "bring", "write", "meet",
    "include", "learn", "change", "watch", "follow", "stop", "create", "read",
    "open", "walk", "offer", "remember", "love", "consider", "buy", "wait",
    "serve", "send", "build", "reach", "raise", "pass", "sell", "require",
    "report", "decide", "pull", "chase", "visit", "paint", "carry", "clean",
    "cook", "fix", "answer", "explain", "describe", "push", "join", "help",
    "start", "finish", "need", "want", "use", "ask", "try", "check", "study",
    "borrow", "catch", "climb", "drive", "enjoy", "feed", "guard", "hunt",
    "invite", "kick", "lift", "miss", "notice", "order", "plant", "protect",
    "share", "teach", "trust", "wash", "wrap"};

const char* const kEnIntransitive[] = {
    "run", "sleep", "arrive", "laugh", "smile", "fall", "wait", "swim", "sing",
    "dance", "cry", "work", "travel", "rest", "shout", "jump", "grow", "leave",
    "appear", "vanish", "return", "talk", "listen", "win", "lose"};

const char* const kEnAdjectives[] = {
    "new", "good", "high", "old", "great", "big", "small", "large", "young",
    "different", "long", "little", "important", "bad", "local", "social",
    "early", "hard", "major", "strong", "whole", "free", "better", "true",
    "full", "special", "easy", "clear", "recent", "certain", "personal", "open",
    "red", "difficult", "available", "likely", "short", "single", "medical",
    "current", "wrong", "private", "past", "foreign", "fine", "common", "poor",
    "natural", "significant", "similar", "hot", "dead", "central", "happy",
    "serious", "ready", "simple", "left", "physical", "general", "green",
    "quiet", "bright", "dark", "heavy", "busy", "clever", "famous", "gentle",
    "hungry", "lazy", "modern", "narrow", "polite", "rich", "shiny", "tall",
    "warm", "wild", "young"};

const char* const kEnAdverbs[] = {
    "also", "very", "often", "however", "too", "usually", "really", "early",
    "never", "always", "sometimes", "together", "likely", "simply", "generally",
    "instead", "actually", "again", "rather", "almost", "especially", "ever",
    "quickly", "probably", "already", "soon", "slowly", "happily", "quietly",
    "finally", "suddenly", "carefully", "recently", "nearly", "certainly",
    "clearly", "easily", "gently", "rarely", "still"};

const char* const kEnPropn[] = {
    "John", "Mary", "London", "Paris", "Anna", "Peter", "Sarah", "David",
    "Emma", "Boston", "Tokyo", "Maria", "James", "Linda", "Chicago", "Robert",
    "Laura", "Dublin", "Alice", "Thomas", "Kevin", "Nora", "Oscar", "Ruth"};

const char* const kEnNumbers[] = {"two", "three", "four", "five", "ten",
                                  "twenty", "six", "seven", "100", "eight",
                                  "nine", "2019", "fifty", "one"};

std::vector<std::string> Strings(std::initializer_list<const char*> items) {
  return {items.begin(), items.end()};
}

template <std::size_t N>
std::vector<std::string> Strings(const char* const (&items)[N]) {
  std::set<std::string> seen;
  std::vector<std::string> out;
  for (const char* s : items) {
    if (seen.insert(s).second) out.push_back(s);
  }
  return out;
}

std::string Plural(const std::string& noun) {
  if (noun == "man") return "men";
  if (noun == "woman") return "women";
  if (noun == "child") return "children";
  if (noun == "person") return "people";
  if (noun == "people" || noun == "others" || noun == "information" ||
      noun == "research" || noun == "education" || noun == "health" ||
      noun == "water" || noun == "money" || noun == "air" || noun == "art") {
    return noun;
  }
  const char last = noun.back();
  if (last == 's' || last == 'x' || noun.ends_with("ch") || noun.ends_with("sh")) {
    return noun + "es";
  }
  if (last == 'y' && noun.size() > 1 &&
      std::string("aeiou").find(noun[noun.size() - 2]) == std::string::npos) {
    return noun.substr(0, noun.size() - 1) + "ies";
  }
  if (noun == "life") return "lives";
  return noun + "s";
}

struct VerbForms {
  std::string base, third, past, participle, gerund;
};

VerbForms Inflect(const std::string& v) {
  static const std::map<std::string, VerbForms> kIrregular = {
      {"see", {"see", "sees", "saw", "seen", "seeing"}},
      {"make", {"make", "makes", "made", "made", "making"}},
      {"take", {"take", "takes", "took", "taken", "taking"}},
      {"find", {"find", "finds", "found", "found", "finding"}},
      {"give", {"give", "gives", "gave", "given", "giving"}},
      {"tell", {"tell", "tells", "told", "told", "telling"}},
      {"keep", {"keep", "keeps", "kept", "kept", "keeping"}},
      {"leave", {"leave", "leaves", "left", "left", "leaving"}},
      {"hear", {"hear", "hears", "heard", "heard", "hearing"}},
      {"hold", {"hold", "holds", "held", "held", "holding"}},
      {"bring", {"bring", "brings", "brought", "brought", "bringing"}},
      {"write", {"write", "writes", "wrote", "written", "writing"}},
      {"meet", {"meet", "meets", "met", "met", "meeting"}},
      {"read", {"read", "reads", "read", "read", "reading"}},
      {"buy", {"buy", "buys", "bought", "bought", "buying"}},
      {"send", {"send", "sends", "sent", "sent", "sending"}},
      {"build", {"build", "builds", "built", "built", "building"}},
      {"sell", {"sell", "sells", "sold", "sold", "selling"}},
      {"catch", {"catch", "catches", "caught", "caught", "catching"}},
      {"drive", {"drive", "drives", "drove", "driven", "driving"}},
      {"feed", {"feed", "feeds", "fed", "fed", "feeding"}},
      {"teach", {"teach", "teaches", "taught", "taught", "teaching"}},
      {"run", {"run", "runs", "ran", "run", "running"}},
      {"sleep", {"sleep", "sleeps", "slept", "slept", "sleeping"}},
      {"fall", {"fall", "falls", "fell", "fallen", "falling"}},
      {"swim", {"swim", "swims", "swam", "swum", "swimming"}},
      {"sing", {"sing", "sings", "sang", "sung", "singing"}},
      {"grow", {"grow", "grows", "grew", "grown", "growing"}},
      {"win", {"win", "wins", "won", "won", "winning"}},
      {"lose", {"lose", "loses", "lost", "lost", "losing"}},
      {"break", {"break", "breaks", "broke", "broken", "breaking"}},
      {"eat", {"eat", "eats", "ate", "eaten", "eating"}},
      {"go", {"go", "goes", "went", "gone", "going"}},
      {"sit", {"sit", "sits", "sat", "sat", "sitting"}},
      {"shut", {"shut", "shuts", "shut", "shut", "shutting"}},
      {"stop", {"stop", "stops", "stopped", "stopped", "stopping"}},
      {"plan", {"plan", "plans", "planned", "planned", "planning"}},
      {"jump", {"jump", "jumps", "jumped", "jumped", "jumping"}},
      {"cry", {"cry", "cries", "cried", "cried", "crying"}},
      {"try", {"try", "tries", "tried", "tried", "trying"}},
      {"study", {"study", "studies", "studied", "studied", "studying"}},
      {"carry", {"carry", "carries", "carried", "carried", "carrying"}},
  };
  if (auto it = kIrregular.find(v); it != kIrregular.end()) return it->second;
  VerbForms f;
  f.base = v;
  const bool ends_e = v.back() == 'e';
  const bool sibilant = v.back() == 's' || v.back() == 'x' || v.ends_with("ch") ||
                        v.ends_with("sh");
  f.third = sibilant ? v + "es" : v + "s";
  f.past = ends_e ? v + "d" : v + "ed";
  f.participle = f.past;
  f.gerund = ends_e && v != "see" ? v.substr(0, v.size() - 1) + "ing" : v + "ing";
  return f;
}

// Synthetic stems from a syllable inventory, unique and sorted by draw order.
std::vector<std::string> SyntheticWords(Rng& rng, const std::vector<std::string>& syllables,
                                        int count, int min_syl, int max_syl,
                                        const std::set<std::string>& avoid) {
  std::set<std::string> seen(avoid.begin(), avoid.end());
  std::vector<std::string> out;
  while (static_cast<int>(out.size()) < count) {
    const int n = min_syl + static_cast<int>(rng.Below(max_syl - min_syl + 1));
    std::string w;
    for (int k = 0; k < n; ++k) w += syllables[rng.Below(syllables.size())];
    if (seen.insert(w).second) out.push_back(w);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grammar.

enum class Order { kSvo, kSov, kVso };

struct Grammar {
  std::string code;
  Order order = Order::kSvo;
  bool postpositions = false;
  bool adj_after_noun = false;
  bool capitalize = true;

  Lexicon nouns, verbs, intransitive, adjectives, adverbs, propns, numbers;
  Lexicon dets, adps, cconjs, sconjs, prons, auxes, parts;
  // Postpositional languages mark subject and object with dedicated
  // particles.
  std::string subject_case, object_case, genitive;

  double p_pron = 0.2, p_propn = 0.08, p_det = 0.7, p_adj = 0.3, p_num = 0.05;
  double p_noun_pp = 0.15, p_verb_pp = 0.55, p_second_pp = 0.2, p_obj = 0.7;
  double p_aux = 0.45, p_second_aux = 0.2, p_adv = 0.25, p_sub = 0.25;
  double p_coord_np = 0.06, p_coord_clause = 0.12, p_part = 0.1;
  double p_genitive = 0.1, p_pre_det_adv = 0.03, p_fronted_sub = 0.3;
};

class Generator {
 public:
  Generator(const Grammar& g, std::uint64_t seed) : g_(g), rng_(seed) {}

  Sentence Next(const std::string& sent_id) {
    Phrase clause = Clause(0);
    const Phrase punct = b_.Word(".", Upos::kPunct);
    b_.Attach(punct.head, clause.head, "punct");
    return b_.Finish(Builder::Cat({&clause, &punct}, clause.head), sent_id,
                     g_.capitalize);
  }

 private:
  bool Chance(double p) { return rng_.Uniform() < p; }

  Phrase Noun(int depth, bool allow_pp) {
    if (Chance(g_.p_pron)) return b_.Word(g_.prons.Pick(rng_), Upos::kPron);
    if (Chance(g_.p_propn)) return b_.Word(g_.propns.Pick(rng_), Upos::kPropn);

    Phrase noun = b_.Word(g_.nouns.Pick(rng_), Upos::kNoun);
    std::vector<Phrase> left, right;
    if (Chance(g_.p_det)) {
      Phrase det = b_.Word(g_.dets.Pick(rng_), Upos::kDet);
      b_.Attach(det.head, noun.head, "det");
      left.push_back(det);
    }
    if (Chance(g_.p_num)) {
      Phrase num = b_.Word(g_.numbers.Pick(rng_), Upos::kNum);
      b_.Attach(num.head, noun.head, "nummod");
      left.push_back(num);
    }
    int adjs = 0;
    while (adjs < 2 && Chance(adjs == 0 ? g_.p_adj : g_.p_adj / 3)) {
      Phrase adj = b_.Word(g_.adjectives.Pick(rng_), Upos::kAdj);
      b_.Attach(adj.head, noun.head, "amod");
      (g_.adj_after_noun ? right : left).push_back(adj);
      ++adjs;
    }
    if (!left.empty() && Chance(g_.p_pre_det_adv)) {
      Phrase adv = b_.Word(g_.adverbs.Pick(rng_), Upos::kAdv);
      b_.Attach(adv.head, noun.head, "advmod");
      left.insert(left.begin(), adv);
    }
    if (g_.postpositions && Chance(g_.p_genitive) && depth < 2) {
      // [N no] N: the genitive noun precedes its head.
      Phrase owner = Noun(depth + 1, false);
      Phrase gen = b_.Word(g_.genitive, Upos::kAdp);
      b_.Attach(gen.head, owner.head, "case");
      b_.Attach(owner.head, noun.head, "nmod");
      left.insert(left.begin(), Builder::Cat({&owner, &gen}, owner.head));
    }
    if (allow_pp && depth < 2 && Chance(g_.p_noun_pp)) {
      Phrase pp = Adpositional(depth + 1);
      b_.Attach(pp.head, noun.head, "nmod");
      (g_.postpositions ? left : right).push_back(pp);
      if (g_.postpositions) std::rotate(left.begin(), left.end() - 1, left.end());
    }
    Phrase out;
    out.head = noun.head;
    for (const Phrase& p : left) out.order.insert(out.order.end(), p.order.begin(), p.order.end());
    out.order.push_back(noun.head);
    for (const Phrase& p : right) out.order.insert(out.order.end(), p.order.begin(), p.order.end());

    if (depth < 2 && Chance(g_.p_coord_np)) {
      Phrase cc = b_.Word(g_.cconjs.Pick(rng_), Upos::kCconj);
      Phrase second = Noun(depth + 1, false);
      b_.Attach(cc.head, second.head, "cc");
      b_.Attach(second.head, out.head, "conj");
      out = Builder::Cat({&out, &cc, &second}, out.head);
    }
    return out;
  }

  Phrase Adpositional(int depth) {
    Phrase np = Noun(depth, true);
    Phrase adp = b_.Word(g_.adps.Pick(rng_), Upos::kAdp);
    b_.Attach(adp.head, np.head, "case");
    return g_.postpositions ? Builder::Cat({&np, &adp}, np.head)
                            : Builder::Cat({&adp, &np}, np.head);
  }

  Phrase Cased(Phrase np, const std::string& marker) {
    if (!g_.postpositions || marker.empty()) return np;
    Phrase adp = b_.Word(marker, Upos::kAdp);
    b_.Attach(adp.head, np.head, "case");
    return Builder::Cat({&np, &adp}, np.head);
  }

  Phrase Clause(int depth) {
    const bool transitive = Chance(g_.p_obj);
    Phrase verb = b_.Word(transitive ? g_.verbs.Pick(rng_) : g_.intransitive.Pick(rng_),
                          Upos::kVerb);
    Phrase subj = Cased(Noun(depth, true), g_.subject_case);
    b_.Attach(subj.head, verb.head, "nsubj");
    std::optional<Phrase> obj;
    if (transitive) {
      obj = Cased(Noun(depth, true), g_.object_case);
      b_.Attach(obj->head, verb.head, "obj");
    }
    std::vector<Phrase> auxes;
    if (Chance(g_.p_aux)) {
      auxes.push_back(b_.Word(g_.auxes.Pick(rng_), Upos::kAux));
      if (Chance(g_.p_second_aux)) auxes.push_back(b_.Word(g_.auxes.Pick(rng_), Upos::kAux));
      for (const Phrase& a : auxes) b_.Attach(a.head, verb.head, "aux");
    }
    std::optional<Phrase> adv;
    if (Chance(g_.p_adv)) {
      adv = b_.Word(g_.adverbs.Pick(rng_), Upos::kAdv);
      b_.Attach(adv->head, verb.head, "advmod");
    }
    std::optional<Phrase> part;
    if (g_.order == Order::kVso && Chance(g_.p_part)) {
      part = b_.Word(g_.parts.Pick(rng_), Upos::kPart);
      b_.Attach(part->head, verb.head, "mark:prt");
    }
    std::vector<Phrase> pps;
    if (depth < 2 && Chance(g_.p_verb_pp)) {
      pps.push_back(Adpositional(depth + 1));
      if (Chance(g_.p_second_pp)) pps.push_back(Adpositional(depth + 1));
      for (const Phrase& p : pps) b_.Attach(p.head, verb.head, "obl");
    }

    std::vector<const Phrase*> seq;
    auto add = [&](const std::optional<Phrase>& p) {
      if (p) seq.push_back(&*p);
    };
    switch (g_.order) {
      case Order::kSvo:
        seq.push_back(&subj);
        for (const Phrase& a : auxes) seq.push_back(&a);
        add(adv);
        seq.push_back(&verb);
        add(obj);
        for (const Phrase& p : pps) seq.push_back(&p);
        break;
      case Order::kSov:
        seq.push_back(&subj);
        for (const Phrase& p : pps) seq.push_back(&p);
        add(obj);
        add(adv);
        seq.push_back(&verb);
        for (const Phrase& a : auxes) seq.push_back(&a);
        break;
      case Order::kVso:
        add(part);
        for (const Phrase& a : auxes) seq.push_back(&a);
        seq.push_back(&verb);
        seq.push_back(&subj);
        add(obj);
        add(adv);
        for (const Phrase& p : pps) seq.push_back(&p);
        break;
    }
    Phrase clause;
    clause.head = verb.head;
    for (const Phrase* p : seq) {
      clause.order.insert(clause.order.end(), p->order.begin(), p->order.end());
    }

    if (depth < 1 && Chance(g_.p_sub)) {
      Phrase sub = Clause(depth + 1);
      Phrase mark = b_.Word(g_.sconjs.Pick(rng_), Upos::kSconj);
      b_.Attach(mark.head, sub.head, "mark");
      b_.Attach(sub.head, clause.head, "advcl");
      const Phrase marked = g_.postpositions ? Builder::Cat({&sub, &mark}, sub.head)
                                             : Builder::Cat({&mark, &sub}, sub.head);
      if (g_.order == Order::kSov || Chance(g_.p_fronted_sub)) {
        Phrase comma = b_.Word(",", Upos::kPunct);
        b_.Attach(comma.head, sub.head, "punct");
        clause = Builder::Cat({&marked, &comma, &clause}, clause.head);
      } else {
        clause = Builder::Cat({&clause, &marked}, clause.head);
      }
    } else if (depth < 1 && Chance(g_.p_coord_clause)) {
      Phrase second = Clause(depth + 1);
      Phrase cc = b_.Word(g_.cconjs.Pick(rng_), Upos::kCconj);
      Phrase comma = b_.Word(",", Upos::kPunct);
      b_.Attach(cc.head, second.head, "cc");
      b_.Attach(comma.head, second.head, "punct");
      b_.Attach(second.head, clause.head, "conj");
      clause = Builder::Cat({&clause, &comma, &cc, &second}, clause.head);
    }
    return clause;
  }

  const Grammar& g_;
  Rng rng_;
  Builder b_;
};

Grammar EnglishGrammar() {
  Grammar g;
  g.code = "en";
  g.order = Order::kSvo;
  std::vector<std::string> nouns;
  for (const std::string& n : Strings(kEnNouns)) {
    nouns.push_back(n);
    nouns.push_back(Plural(n));
  }
  std::set<std::string> unique;
  std::vector<std::string> deduped;
  for (const std::string& n : nouns) {
    if (unique.insert(n).second) deduped.push_back(n);
  }
  g.nouns = Lexicon(deduped);
  std::vector<std::string> verbs, intransitive;
  for (const std::string& v : Strings(kEnVerbs)) {
    const VerbForms f = Inflect(v);
    for (const std::string& form : {f.base, f.third, f.past, f.gerund}) {
      if (unique.insert(form).second) verbs.push_back(form);
    }
  }
  for (const std::string& v : Strings(kEnIntransitive)) {
    const VerbForms f = Inflect(v);
    for (const std::string& form : {f.base, f.third, f.past, f.gerund}) {
      if (unique.insert(form).second) intransitive.push_back(form);
    }
  }
  g.verbs = Lexicon(verbs);
  g.intransitive = Lexicon(intransitive);
  g.adjectives = Lexicon(Strings(kEnAdjectives));
  g.adverbs = Lexicon(Strings(kEnAdverbs));
  g.propns = Lexicon(Strings(kEnPropn));
  g.numbers = Lexicon(Strings(kEnNumbers));
  g.dets = Lexicon(Strings({"the", "a", "this", "that", "an", "no", "all", "these",
                            "any", "each", "another", "those", "every", "both",
                            "either", "neither"}));
  g.adps = Lexicon(Strings({"of", "in", "to", "for", "with", "on", "at", "from", "by",
                            "about", "into", "like", "through", "after", "over",
                            "between", "against", "during", "without", "before",
                            "under", "around", "among", "near", "across", "behind",
                            "toward", "along", "despite", "upon", "beyond", "within"}));
  g.cconjs = Lexicon(Strings({"and", "but", "or", "yet"}));
  g.sconjs = Lexicon(Strings({"that", "if", "because", "when", "while", "as", "after",
                              "before", "since", "although", "until", "whether",
                              "unless", "once", "though"}));
  g.prons = Lexicon(Strings({"it", "he", "she", "they", "we", "i", "you", "them",
                             "him", "her", "us", "me", "something", "everyone"}));
  g.auxes = Lexicon(Strings({"is", "was", "will", "would", "can", "has", "have",
                             "had", "could", "are", "were", "be", "been", "should",
                             "may", "might", "must", "did", "does", "do", "being",
                             "shall", "am"}));
  return g;
}

Grammar JapaneseGrammar(Rng& rng) {
  Grammar g;
  g.code = "ja";
  g.order = Order::kSov;
  g.postpositions = true;
  g.capitalize = false;
  const std::vector<std::string> syllables = {
      "ka", "ki", "ku", "ke", "ko", "sa", "shi", "su", "se", "so", "ta", "chi",
      "tsu", "te", "to", "na", "ni", "nu", "ne", "no", "ha", "hi", "fu", "he",
      "ho", "ma", "mi", "mu", "me", "mo", "ya", "yu", "yo", "ra", "ri", "ru",
      "re", "ro", "wa", "ga", "gi", "go", "za", "ji", "zu", "da", "de", "do",
      "ba", "bi", "bu", "be", "bo", "n", "a", "i", "u", "e", "o"};
  const std::set<std::string> function_forms = {
      "ga", "wa", "o", "ni", "de", "to", "kara", "made", "no", "e", "yori",
      "ta", "masu", "da", "desu", "nai", "reru", "iru", "node", "ba", "nagara",
      "kono", "sono", "ano", "dono", "soshite", "mata", "shikashi", "watashi",
      "kare", "kanojo", "sore", "kore", "karera", "anata", "ka", "ne", "yo"};
  g.nouns = Lexicon(SyntheticWords(rng, syllables, 1500, 2, 4, function_forms));
  g.verbs = Lexicon(SyntheticWords(rng, syllables, 500, 2, 3, function_forms));
  g.intransitive = Lexicon(SyntheticWords(rng, syllables, 200, 2, 3, function_forms));
  g.adjectives = Lexicon(SyntheticWords(rng, syllables, 300, 2, 3, function_forms));
  g.adverbs = Lexicon(SyntheticWords(rng, syllables, 100, 2, 4, function_forms));
  g.propns = Lexicon(SyntheticWords(rng, syllables, 80, 2, 4, function_forms));
  g.numbers = Lexicon(Strings({"ichi", "ni-hon", "san-nin", "yon", "go-hiki", "juu",
                               "hyaku", "sen"}));
  g.dets = Lexicon(Strings({"kono", "sono", "ano", "dono"}));
  g.adps = Lexicon(Strings({"ni", "de", "to", "kara", "made", "e", "yori"}));
  g.cconjs = Lexicon(Strings({"soshite", "mata", "shikashi"}));
  g.sconjs = Lexicon(Strings({"kara", "node", "ba", "nagara", "to"}));
  g.prons = Lexicon(Strings({"watashi", "kare", "kanojo", "sore", "kore", "karera",
                             "anata"}));
  g.auxes = Lexicon(Strings({"ta", "masu", "da", "desu", "nai", "reru", "iru"}));
  g.subject_case = "ga";
  g.object_case = "o";
  g.genitive = "no";
  g.p_det = 0.12;
  g.p_adj = 0.25;
  g.p_pron = 0.15;
  g.p_aux = 0.7;
  g.p_second_aux = 0.35;
  g.p_noun_pp = 0.05;
  g.p_genitive = 0.15;
  g.p_coord_np = 0.03;
  return g;
}

Grammar IrishGrammar(Rng& rng) {
  Grammar g;
  g.code = "ga";
  g.order = Order::kVso;
  g.adj_after_noun = true;
  const std::vector<std::string> syllables = {
      "ba", "bea", "ca", "cea", "da", "fa", "ga", "la", "ma", "na", "ra", "sa",
      "ta", "bi", "ci", "di", "fi", "li", "mi", "ni", "ri", "si", "ti", "bo",
      "co", "do", "fo", "go", "lo", "mo", "no", "ro", "so", "to", "bu", "cu",
      "du", "lu", "mu", "ru", "tu", "ch", "bh", "mh", "dh", "gh", "nn", "ll",
      "rr", "ai", "ao", "ea", "ei", "ia", "io", "ua", "ui", "th"};
  const std::set<std::string> function_forms = {
      "an", "na", "ar", "le", "do", "i", "ag", "faoi", "chuig", "as", "roimh",
      "tri", "is", "ba", "ni", "go", "a", "nach", "ma", "nuair", "mar", "agus",
      "ach", "no", "me", "tu", "se", "si", "muid", "siad", "e", "iad"};
  g.nouns = Lexicon(SyntheticWords(rng, syllables, 1500, 2, 3, function_forms));
  g.verbs = Lexicon(SyntheticWords(rng, syllables, 500, 2, 3, function_forms));
  g.intransitive = Lexicon(SyntheticWords(rng, syllables, 200, 2, 3, function_forms));
  g.adjectives = Lexicon(SyntheticWords(rng, syllables, 300, 2, 3, function_forms));
  g.adverbs = Lexicon(SyntheticWords(rng, syllables, 100, 2, 3, function_forms));
  g.propns = Lexicon(SyntheticWords(rng, syllables, 80, 2, 3, function_forms));
  g.numbers = Lexicon(Strings({"aon", "dha", "tri-cinn", "ceithre", "cuig", "deich"}));
  g.dets = Lexicon(Strings({"an", "na"}));
  g.adps = Lexicon(Strings({"ar", "le", "do", "i", "ag", "faoi", "chuig", "as",
                            "roimh", "tri"}));
  g.cconjs = Lexicon(Strings({"agus", "ach", "no"}));
  g.sconjs = Lexicon(Strings({"go", "nach", "ma", "nuair", "mar"}));
  g.prons = Lexicon(Strings({"me", "tu", "se", "si", "muid", "siad", "e", "iad"}));
  g.auxes = Lexicon(Strings({"is", "ba"}));
  g.parts = Lexicon(Strings({"ni", "a", "go", "nior"}));
  g.p_det = 0.55;
  g.p_aux = 0.08;
  g.p_second_aux = 0.0;
  g.p_part = 0.25;
  g.p_adj = 0.3;
  return g;
}

std::vector<Sentence> Generate(const Grammar& g, std::uint64_t seed, int count,
                               const std::string& prefix) {
  Generator gen(g, seed);
  std::vector<Sentence> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(gen.Next(prefix + "-" + std::to_string(i + 1)));
  }
  return out;
}

void WriteText(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

void WriteGzip(const fs::path& path, const std::string& text) {
  gzFile f = gzopen(path.c_str(), "wb9");
  if (!f) throw std::runtime_error("cannot open " + path.string());
  if (gzwrite(f, text.data(), static_cast<unsigned>(text.size())) !=
      static_cast<int>(text.size())) {
    gzclose(f);
    throw std::runtime_error("cannot write " + path.string());
  }
  gzclose(f);
}

std::string Serialize(const Treebank& tb) {
  std::ostringstream out;
  WriteConllu(out, tb);
  return out.str();
}

// ---------------------------------------------------------------------------
// Toy minimal-pair suite. Each template gives a good and a bad token list in
// "form:UPOS:head:deprel" notation; {N}, {Ns}, {V3}, {Vb}, {Vpast}, {A}
// are filled from the English word lists, shared by both members.

struct PairTemplate {
  std::string phenomenon;
  std::string subcategory;
  std::string good;
  std::string bad;
};

const std::vector<PairTemplate>& PairTemplates() {
  static const std::vector<PairTemplate> kTemplates = {
      {"determiner_noun_agreement", "determiner_noun_agreement_1",
       "{Ns}:NOUN:2:nsubj {V3x}:VERB:0:root these:DET:4:det {Ns2}:NOUN:2:obj .:PUNCT:2:punct",
       "{Ns}:NOUN:2:nsubj {V3x}:VERB:0:root this:DET:4:det {Ns2}:NOUN:2:obj .:PUNCT:2:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_2",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root that:DET:5:det {N2}:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root those:DET:5:det {N2}:NOUN:3:obj .:PUNCT:3:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_irregular_1",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root this:DET:5:det child:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root these:DET:5:det child:NOUN:3:obj .:PUNCT:3:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_irregular_2",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root those:DET:5:det men:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root that:DET:5:det men:NOUN:3:obj .:PUNCT:3:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_with_adjective_1",
       "{Ns}:NOUN:2:nsubj {V3x}:VERB:0:root these:DET:5:det {A}:ADJ:5:amod {Ns2}:NOUN:2:obj .:PUNCT:2:punct",
       "{Ns}:NOUN:2:nsubj {V3x}:VERB:0:root this:DET:5:det {A}:ADJ:5:amod {Ns2}:NOUN:2:obj .:PUNCT:2:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_with_adjective_2",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root that:DET:6:det {A}:ADJ:6:amod {N2}:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root those:DET:6:det {A}:ADJ:6:amod {N2}:NOUN:3:obj .:PUNCT:3:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_with_adj_irregular_1",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root this:DET:6:det {A}:ADJ:6:amod woman:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root these:DET:6:det {A}:ADJ:6:amod woman:NOUN:3:obj .:PUNCT:3:punct"},
      {"determiner_noun_agreement", "determiner_noun_agreement_with_adj_irregular_2",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root these:DET:6:det {A}:ADJ:6:amod children:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root this:DET:6:det {A}:ADJ:6:amod children:NOUN:3:obj .:PUNCT:3:punct"},
      {"npi_licensing", "matrix_question_npi_licensor_present",
       "should:AUX:4:aux {Ns}:NOUN:4:nsubj ever:ADV:4:advmod {Vb}:VERB:0:root ?:PUNCT:4:punct",
       "{Ns}:NOUN:4:nsubj should:AUX:4:aux ever:ADV:4:advmod {Vb}:VERB:0:root .:PUNCT:4:punct"},
      {"quantifiers", "existential_there_quantifiers_1",
       "there:PRON:2:expl were:VERB:0:root many:ADJ:4:amod {Ns}:NOUN:2:nsubj .:PUNCT:2:punct",
       "there:PRON:2:expl were:VERB:0:root all:DET:4:det {Ns}:NOUN:2:nsubj .:PUNCT:2:punct"},
      {"quantifiers", "existential_there_quantifiers_2",
       "there:PRON:2:expl was:VERB:0:root a:DET:4:det {N}:NOUN:2:nsubj .:PUNCT:2:punct",
       "there:PRON:2:expl was:VERB:0:root each:DET:4:det {N}:NOUN:2:nsubj .:PUNCT:2:punct"},
      {"quantifiers", "superlative_quantifiers_1",
       "no:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root more:ADJ:5:amod {Ns2}:NOUN:3:obj .:PUNCT:3:punct",
       "no:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root at:ADP:5:case most:ADJ:3:obl .:PUNCT:3:punct"},
      {"quantifiers", "superlative_quantifiers_2",
       "an:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root fewer:ADJ:5:amod {Ns2}:NOUN:3:obj .:PUNCT:3:punct",
       "an:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root at:ADP:5:case least:ADJ:3:obl .:PUNCT:3:punct"},
      {"subject_verb_agreement", "regular_plural_subject_verb_agreement_1",
       "the:DET:2:det {Ns}:NOUN:3:nsubj {Vb}:VERB:0:root .:PUNCT:3:punct",
       "the:DET:2:det {Ns}:NOUN:3:nsubj {V3}:VERB:0:root .:PUNCT:3:punct"},
      {"subject_verb_agreement", "distractor_agreement_relational_noun",
       "the:DET:2:det {N}:NOUN:7:nsubj of:ADP:5:case the:DET:5:det {Ns2}:NOUN:2:nmod is:AUX:7:aux {Vger}:VERB:0:root .:PUNCT:7:punct",
       "the:DET:2:det {N}:NOUN:7:nsubj of:ADP:5:case the:DET:5:det {Ns2}:NOUN:2:nmod are:AUX:7:aux {Vger}:VERB:0:root .:PUNCT:7:punct"},
      {"irregular_forms", "irregular_past_participle_verbs",
       "the:DET:2:det {N}:NOUN:4:nsubj had:AUX:4:aux broken:VERB:0:root the:DET:6:det {N2}:NOUN:4:obj .:PUNCT:4:punct",
       "the:DET:2:det {N}:NOUN:4:nsubj had:AUX:4:aux broke:VERB:0:root the:DET:6:det {N2}:NOUN:4:obj .:PUNCT:4:punct"},
      {"island_effects", "wh_island",
       "what:PRON:5:obj did:AUX:5:aux {Ns}:NOUN:5:nsubj quickly:ADV:5:advmod {Vb}:VERB:0:root ?:PUNCT:5:punct",
       "what:PRON:5:obj did:AUX:5:aux quickly:ADV:5:advmod {Ns}:NOUN:5:nsubj {Vb}:VERB:0:root ?:PUNCT:5:punct"},
      {"anaphor_agreement", "anaphor_number_agreement",
       "the:DET:2:det {Ns}:NOUN:3:nsubj {Vpast}:VERB:0:root themselves:PRON:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {Ns}:NOUN:3:nsubj {Vpast}:VERB:0:root itself:PRON:3:obj .:PUNCT:3:punct"},
      {"argument_structure", "transitive",
       "the:DET:2:det {N}:NOUN:3:nsubj {Vpast}:VERB:0:root the:DET:5:det {N2}:NOUN:3:obj .:PUNCT:3:punct",
       "the:DET:2:det {N}:NOUN:3:nsubj {Ipast}:VERB:0:root the:DET:5:det {N2}:NOUN:3:obj .:PUNCT:3:punct"},
      {"binding", "principle_A_reconstruction",
       "{N}:PROPN:2:nsubj {Vpast}:VERB:0:root herself:PRON:2:obj .:PUNCT:2:punct",
       "herself:PRON:2:nsubj {Vpast}:VERB:0:root {N}:PROPN:2:obj .:PUNCT:2:punct"},
  };
  return kTemplates;
}

std::vector<Token> FillTemplate(const std::string& spec,
                                const std::map<std::string, std::string>& slots) {
  std::vector<Token> tokens;
  std::istringstream in(spec);
  std::string item;
  while (in >> item) {
    // Split on the last three ':' so forms may contain ':'.
    std::size_t c3 = item.rfind(':');
    std::size_t c2 = item.rfind(':', c3 - 1);
    std::size_t c1 = item.rfind(':', c2 - 1);
    std::string form = item.substr(0, c1);
    const std::string tag = item.substr(c1 + 1, c2 - c1 - 1);
    const int head = std::stoi(item.substr(c2 + 1, c3 - c2 - 1));
    const std::string deprel = item.substr(c3 + 1);
    if (form.size() > 2 && form.front() == '{' && form.back() == '}') {
      form = slots.at(form.substr(1, form.size() - 2));
    }
    Token t;
    t.index = static_cast<int>(tokens.size()) + 1;
    t.form = form;
    t.lemma = form;
    t.upos = *ParseUpos(tag);
    t.head = head;
    t.deprel = deprel;
    tokens.push_back(std::move(t));
  }
  if (!tokens.empty() && tokens[0].form[0] >= 'a' && tokens[0].form[0] <= 'z') {
    tokens[0].form[0] = static_cast<char>(tokens[0].form[0] - 'a' + 'A');
  }
  return tokens;
}

std::string TextOf(const std::vector<Token>& tokens) {
  std::string text;
  for (const Token& t : tokens) {
    if (!text.empty() && t.upos != Upos::kPunct) text += ' ';
    text += t.form;
  }
  return text;
}

void WriteToySuite(const fs::path& dir, int pairs_per_template) {
  Rng rng(MixSeed(kSeed, {0x5017E}));
  const std::vector<std::string> nouns = Strings(kEnNouns);
  const std::vector<std::string> verbs = Strings(kEnVerbs);
  const std::vector<std::string> intransitive = Strings(kEnIntransitive);
  const std::vector<std::string> adjectives = Strings(kEnAdjectives);
  const std::vector<std::string> names = Strings(kEnPropn);
  auto pick = [&](const std::vector<std::string>& list) -> const std::string& {
    return list[rng.Below(list.size())];
  };

  std::ostringstream suite;
  Treebank sidecar;
  sidecar.language_code = "en";
  for (const PairTemplate& t : PairTemplates()) {
    for (int k = 0; k < pairs_per_template; ++k) {
      std::map<std::string, std::string> slots;
      std::string n1 = pick(nouns), n2 = pick(nouns);
      while (n2 == n1 || Plural(n2) == Plural(n1)) n2 = pick(nouns);
      const VerbForms v = Inflect(pick(verbs));
      const VerbForms vi = Inflect(pick(intransitive));
      slots["N"] = n1;
      slots["N2"] = n2;
      slots["Ns"] = Plural(n1);
      slots["Ns2"] = Plural(n2);
      slots["Vb"] = v.base;
      slots["V3"] = v.third;
      slots["V3x"] = v.base;
      slots["Vpast"] = v.past;
      slots["Vger"] = v.gerund;
      slots["Ipast"] = vi.past;
      slots["A"] = pick(adjectives);
      if (t.subcategory == "principle_A_reconstruction") {
        slots["N"] = pick(names);
      }

      char id[96];
      std::snprintf(id, sizeof(id), "%s-%02d", t.subcategory.c_str(), k + 1);
      const std::vector<Token> good = FillTemplate(t.good, slots);
      const std::vector<Token> bad = FillTemplate(t.bad, slots);
      nlohmann::json line = {{"pair_id", id},
                             {"phenomenon", t.phenomenon},
                             {"subcategory", t.subcategory},
                             {"good", TextOf(good)},
                             {"bad", TextOf(bad)}};
      suite << line.dump() << '\n';
      sidecar.sentences.emplace_back(good, std::string(id) + ".good", TextOf(good));
      sidecar.sentences.emplace_back(bad, std::string(id) + ".bad", TextOf(bad));
    }
  }
  WriteText(dir / "toy_suite.jsonl", suite.str());
  WriteText(dir / "toy_suite.conllu", Serialize(sidecar));
}

int Main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_samples <data directory>\n";
    return 2;
  }
  const fs::path root = argv[1];
  fs::create_directories(root / "treebanks");
  fs::create_directories(root / "mini");
  fs::create_directories(root / "benchmark");

  Rng lexicon_rng(MixSeed(kSeed, {0x1E7}));
  const Grammar en = EnglishGrammar();
  const Grammar ja = JapaneseGrammar(lexicon_rng);
  const Grammar ga = IrishGrammar(lexicon_rng);

  struct Output {
    const Grammar* grammar;
    int sentences;
    std::string file;
    bool gzip;
  };
  const std::vector<Output> outputs = {
      {&en, 12000, "treebanks/en_synthetic.conllu.gz", true},
      {&ja, 1000, "treebanks/ja_synthetic.conllu", false},
      {&ga, 1000, "treebanks/ga_synthetic.conllu", false},
  };
  for (const Output& o : outputs) {
    Treebank tb;
    tb.language_code = o.grammar->code;
    tb.sentences = Generate(*o.grammar, MixSeed(kSeed, {HashString(o.grammar->code)}),
                            o.sentences, o.grammar->code + "-synth");
    const std::string text = Serialize(tb);
    if (o.gzip) {
      WriteGzip(root / o.file, text);
    } else {
      WriteText(root / o.file, text);
    }
    std::cout << o.file << ": " << tb.sentences.size() << " sentences, "
              << tb.TokenCount() << " tokens\n";
  }

  Treebank mini;
  mini.language_code = "en";
  mini.sentences = Generate(en, MixSeed(kSeed, {0x313}), 40, "en-mini");
  WriteText(root / "mini/en_mini.conllu", Serialize(mini));

  WriteToySuite(root / "benchmark", 10);
  std::cout << "benchmark/toy_suite.jsonl: " << PairTemplates().size() * 10
            << " pairs\n";
  return 0;
}

}  // namespace
}  // namespace funcword

int main(int argc, char** argv) {
  try {
    return funcword::Main(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "make_samples: " << e.what() << '\n';
    return 1;
  }
}
