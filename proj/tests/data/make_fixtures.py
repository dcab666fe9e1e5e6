#
# Copyright 2026 The sentanalogy Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
#

"""Writes the annotated test fixtures.

  syntactic_sample.jsonl  hand-annotated sentences for the corpus rules
  annotated_500.jsonl     grammar-generated annotated sentences
  relations.jsonl         entailment and negation rows with parsed hypotheses

Usage: python3 make_fixtures.py OUT_DIR
"""

import json
import pathlib
import random
import sys

# text/POS/TAG/dep/head[/lemma]; heads are 0-based, the root points at itself.
SAMPLE = [
    # Comparative.
    "The/DET/DT/det/2 second/ADJ/JJ/amod/2 article/NOUN/NN/nsubj/3 "
    "was/AUX/VBD/ROOT/3/be longer/ADJ/JJR/acomp/3/long than/ADP/IN/prep/4 "
    "the/DET/DT/det/8 first/ADJ/JJ/amod/8 article/NOUN/NN/pobj/5 "
    "./PUNCT/./punct/3",
    "This/DET/DT/det/1 road/NOUN/NN/nsubj/2 is/AUX/VBZ/ROOT/2/be "
    "wider/ADJ/JJR/acomp/2/wide than/ADP/IN/prep/3 the/DET/DT/det/7 "
    "old/ADJ/JJ/amod/7 one/NOUN/NN/pobj/4 ./PUNCT/./punct/2",
    "Her/PRON/PRP$/poss/1 house/NOUN/NN/nsubj/2 was/AUX/VBD/ROOT/2/be "
    "bigger/ADJ/JJR/acomp/2/big than/ADP/IN/prep/3 ours/PRON/PRP/pobj/4 "
    "./PUNCT/./punct/2",
    "The/DET/DT/det/1 test/NOUN/NN/nsubj/2 seemed/VERB/VBD/ROOT/2/seem "
    "easier/ADJ/JJR/acomp/2/easy than/ADP/IN/prep/3 the/DET/DT/det/7 "
    "last/ADJ/JJ/amod/7 one/NOUN/NN/pobj/4 ./PUNCT/./punct/2",
    "My/PRON/PRP$/poss/1 brother/NOUN/NN/nsubj/2 is/AUX/VBZ/ROOT/2/be "
    "taller/ADJ/JJR/acomp/2/tall than/ADP/IN/prep/3 me/PRON/PRP/pobj/4 "
    "./PUNCT/./punct/2",
    "The/DET/DT/det/1 water/NOUN/NN/nsubj/2 felt/VERB/VBD/ROOT/2/feel "
    "colder/ADJ/JJR/acomp/2/cold than/ADP/IN/prep/3 usual/ADJ/JJ/pobj/4 "
    "./PUNCT/./punct/2",
    "The/DET/DT/det/2 new/ADJ/JJ/amod/2 model/NOUN/NN/nsubj/3 "
    "is/AUX/VBZ/ROOT/3/be faster/ADJ/JJR/acomp/3/fast than/ADP/IN/prep/4 "
    "the/DET/DT/det/8 old/ADJ/JJ/amod/8 model/NOUN/NN/pobj/5 "
    "./PUNCT/./punct/3",
    "The/DET/DT/det/1 results/NOUN/NNS/nsubj/2/result were/AUX/VBD/ROOT/2/be "
    "worse/ADJ/JJR/acomp/2/bad than/ADP/IN/prep/3 "
    "expected/VERB/VBN/pobj/4/expect ./PUNCT/./punct/2",
    "The/DET/DT/det/1 house/NOUN/NN/nsubj/2 was/AUX/VBD/ROOT/2/be "
    "bigger/ADJ/JJR/acomp/2/big now/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "She/PRON/PRP/nsubj/1 ran/VERB/VBD/ROOT/1/run more/ADJ/JJR/amod/4 "
    "than/ADP/IN/quantmod/4 ten/NUM/CD/nummod/5 "
    "miles/NOUN/NNS/dobj/1/mile ./PUNCT/./punct/1",
    "The/DET/DT/det/1 task/NOUN/NN/nsubj/2 was/AUX/VBD/ROOT/2/be "
    "harder/ADJ/JJR/acomp/2/hard than/ADP/IN/prep/3 we/PRON/PRP/nsubj/6 "
    "thought/VERB/VBD/pcomp/4/think ./PUNCT/./punct/2",
    # Opposite.
    "It/PRON/PRP/nsubj/1 's/AUX/VBZ/ROOT/1/be possible/ADJ/JJ/acomp/1 "
    "to/PART/TO/aux/4 measure/VERB/VB/xcomp/2 it/PRON/PRP/dobj/4 "
    "./PUNCT/./punct/1",
    "The/DET/DT/det/1 answer/NOUN/NN/nsubj/2 was/AUX/VBD/ROOT/2/be "
    "clear/ADJ/JJ/acomp/2 ./PUNCT/./punct/2",
    "She/PRON/PRP/nsubj/1 felt/VERB/VBD/ROOT/1/feel "
    "uncomfortable/ADJ/JJ/acomp/1 at/ADP/IN/prep/1 the/DET/DT/det/5 "
    "party/NOUN/NN/pobj/3 ./PUNCT/./punct/1",
    "That/DET/DT/det/1 plan/NOUN/NN/nsubj/2 seems/VERB/VBZ/ROOT/2/seem "
    "reasonable/ADJ/JJ/acomp/2 to/ADP/IN/prep/2 me/PRON/PRP/pobj/4 "
    "./PUNCT/./punct/2",
    "A/DET/DT/det/3 very/ADV/RB/advmod/2 honest/ADJ/JJ/amod/3 "
    "man/NOUN/NN/nsubj/4 spoke/VERB/VBD/ROOT/4/speak first/ADV/RB/advmod/4 "
    "./PUNCT/./punct/4",
    "The/DET/DT/det/1 outcome/NOUN/NN/nsubj/2 is/AUX/VBZ/ROOT/2/be "
    "still/ADV/RB/advmod/2 uncertain/ADJ/JJ/acomp/2 ./PUNCT/./punct/2",
    "We/PRON/PRP/nsubj/1 were/AUX/VBD/ROOT/1/be fortunate/ADJ/JJ/acomp/1 "
    "to/PART/TO/aux/4 win/VERB/VB/xcomp/2 ./PUNCT/./punct/1",
    "The/DET/DT/det/2 old/ADJ/JJ/amod/2 method/NOUN/NN/nsubj/3 "
    "was/AUX/VBD/ROOT/3/be efficient/ADJ/JJ/acomp/3 ./PUNCT/./punct/3",
    "The/DET/DT/det/2 red/ADJ/JJ/amod/2 car/NOUN/NN/nsubj/3 "
    "stopped/VERB/VBD/ROOT/3/stop ./PUNCT/./punct/3",
    "It/PRON/PRP/nsubj/1 is/AUX/VBZ/ROOT/1/be likely/ADJ/JJ/acomp/1 "
    "to/PART/TO/aux/4 rain/VERB/VB/xcomp/2 ./PUNCT/./punct/1",
    "Her/PRON/PRP$/poss/1 story/NOUN/NN/nsubj/2 sounded/VERB/VBD/ROOT/2/sound "
    "convincing/ADJ/JJ/acomp/2 ./PUNCT/./punct/2",
    # Plural.
    "The/DET/DT/det/2 Harvard/PROPN/NNP/compound/2 data/NOUN/NN/nsubj/3 "
    "examined/VERB/VBD/ROOT/3/examine 6/NUM/CD/nummod/5 "
    "cities/NOUN/NNS/dobj/3/city on/ADP/IN/prep/3 the/DET/DT/det/9 "
    "East/PROPN/NNP/compound/9 coast/PROPN/NNP/pobj/6 ./PUNCT/./punct/3",
    "She/PRON/PRP/nsubj/1 bought/VERB/VBD/ROOT/1/buy three/NUM/CD/nummod/3 "
    "bananas/NOUN/NNS/dobj/1/banana ./PUNCT/./punct/1",
    "Two/NUM/CD/nummod/1 dogs/NOUN/NNS/nsubj/2/dog barked/VERB/VBD/ROOT/2/bark "
    "loudly/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "He/PRON/PRP/nsubj/1 owns/VERB/VBZ/ROOT/1/own several/ADJ/JJ/amod/3 "
    "cars/NOUN/NNS/dobj/1/car ./PUNCT/./punct/1",
    "The/DET/DT/det/1 farm/NOUN/NN/nsubj/2 has/VERB/VBZ/ROOT/2/have "
    "12/NUM/CD/nummod/5 brown/ADJ/JJ/amod/5 cows/NOUN/NNS/dobj/2/cow "
    "./PUNCT/./punct/2",
    "We/PRON/PRP/nsubj/1 saw/VERB/VBD/ROOT/1/see dozens/NOUN/NNS/dobj/1/dozen "
    "of/ADP/IN/prep/2 birds/NOUN/NNS/pobj/3/bird ./PUNCT/./punct/1",
    "Only/ADV/RB/advmod/1 one/NUM/CD/nummod/2 child/NOUN/NN/nsubj/3 "
    "came/VERB/VBD/ROOT/3/come ./PUNCT/./punct/3",
    "The/DET/DT/det/1 zoo/NOUN/NN/nsubj/2 keeps/VERB/VBZ/ROOT/2/keep "
    "five/NUM/CD/nummod/4 lions/NOUN/NNS/dobj/2/lion and/CCONJ/CC/cc/4 "
    "two/NUM/CD/nummod/7 elephants/NOUN/NNS/conj/4/elephant "
    "./PUNCT/./punct/2",
    "They/PRON/PRP/nsubj/1 ate/VERB/VBD/ROOT/1/eat dozen/NUM/CD/nummod/3 "
    "apples/NOUN/NNS/dobj/1/apple ./PUNCT/./punct/1",
    "Twenty-five/NUM/CD/nummod/1 students/NOUN/NNS/nsubj/2/student "
    "passed/VERB/VBD/ROOT/2/pass ./PUNCT/./punct/2",
    "The/DET/DT/det/1 shop/NOUN/NN/nsubj/2 sold/VERB/VBD/ROOT/2/sell "
    "40/NUM/CD/nummod/4 bottles/NOUN/NNS/dobj/2/bottle "
    "yesterday/NOUN/NN/npadvmod/2 ./PUNCT/./punct/2",
    # Verb conjugation.
    "Duke/PROPN/NNP/nsubj/2 will/AUX/MD/aux/2 play/VERB/VB/ROOT/2 "
    "better/ADV/RBR/advmod/2/well this/DET/DT/det/5 "
    "year/NOUN/NN/npadvmod/2 ./PUNCT/./punct/2",
    "She/PRON/PRP/nsubj/2 can/AUX/MD/aux/2 swim/VERB/VB/ROOT/2 "
    "very/ADV/RB/advmod/4 fast/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "They/PRON/PRP/nsubj/2 will/AUX/MD/aux/2 sing/VERB/VB/ROOT/2 "
    "tonight/NOUN/NN/npadvmod/2 ./PUNCT/./punct/2",
    "The/DET/DT/det/1 teacher/NOUN/NN/nsubj/3 should/AUX/MD/aux/3 "
    "watch/VERB/VB/ROOT/3 the/DET/DT/det/5 class/NOUN/NN/dobj/3 "
    "./PUNCT/./punct/3",
    "He/PRON/PRP/nsubj/2 might/AUX/MD/aux/2 try/VERB/VB/ROOT/2 "
    "again/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "The/DET/DT/det/1 kids/NOUN/NNS/nsubj/3/kid will/AUX/MD/aux/3 "
    "walk/VERB/VB/ROOT/3 home/ADV/RB/advmod/3 ./PUNCT/./punct/3",
    "It/PRON/PRP/nsubj/2 will/AUX/MD/aux/2 go/VERB/VB/ROOT/2 "
    "away/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "The/DET/DT/det/1 machine/NOUN/NN/nsubj/3 can/AUX/MD/aux/3 "
    "search/VERB/VB/ROOT/3 every/DET/DT/det/5 file/NOUN/NN/dobj/3 "
    "./PUNCT/./punct/3",
    "Anna/PROPN/NNP/nsubj/2 will/AUX/MD/aux/2 be/AUX/VB/ROOT/2 "
    "late/ADJ/JJ/acomp/2 ./PUNCT/./punct/2",
    "We/PRON/PRP/nsubj/2 must/AUX/MD/aux/2 leave/VERB/VB/ROOT/2 "
    "now/ADV/RB/advmod/2 ./PUNCT/./punct/2",
    "The/DET/DT/det/1 company/NOUN/NN/nsubj/3 will/AUX/MD/aux/3 "
    "provide/VERB/VB/ROOT/3 lunch/NOUN/NN/dobj/3 ./PUNCT/./punct/3",
    # No rule applies.
    "The/DET/DT/det/1 sun/NOUN/NN/nsubj/2 rose/VERB/VBD/ROOT/2/rise "
    "./PUNCT/./punct/2",
    "Birds/NOUN/NNS/nsubj/1/bird sing/VERB/VBP/ROOT/1 ./PUNCT/./punct/1",
    "He/PRON/PRP/nsubj/1 left/VERB/VBD/ROOT/1/leave early/ADV/RB/advmod/1 "
    "./PUNCT/./punct/1",
    "My/PRON/PRP$/poss/1 sister/NOUN/NN/nsubj/4 does/AUX/VBZ/aux/4/do "
    "not/PART/RB/neg/4 eat/VERB/VB/ROOT/4 meat/NOUN/NN/dobj/4 "
    "./PUNCT/./punct/4",
    "The/DET/DT/det/1 meeting/NOUN/NN/nsubj/3 was/AUX/VBD/auxpass/3/be "
    "cancelled/VERB/VBN/ROOT/3/cancel ./PUNCT/./punct/3",
    "The/DET/DT/det/1 baby/NOUN/NN/nsubj/2 slept/VERB/VBD/ROOT/2/sleep "
    "./PUNCT/./punct/2",
]


def parse_dsl(line):
  tokens = []
  for item in line.split():
    fields = item.split("/")
    text, pos, tag, dep, head = fields[:5]
    lemma = fields[5] if len(fields) > 5 else text.lower()
    tokens.append({"text": text, "lemma": lemma, "pos": pos, "tag": tag,
                   "dep": dep, "head": int(head)})
  return tokens


class Builder:
  """Accumulates tokens and resolves heads given as token handles."""

  def __init__(self):
    self.tokens = []

  def add(self, text, pos, tag, dep, lemma=None):
    self.tokens.append({"text": text, "lemma": lemma or text.lower(),
                        "pos": pos, "tag": tag, "dep": dep, "head": None})
    return len(self.tokens) - 1

  def attach(self, child, head):
    self.tokens[child]["head"] = head

  def finish(self):
    for t in self.tokens:
      assert t["head"] is not None, t
    return self.tokens


SG_NOUNS = ["man", "woman", "boy", "girl", "teacher", "doctor", "dog", "cat",
            "child", "student", "farmer", "musician", "chef", "player"]
PL_NOUNS = [("men", "man"), ("women", "woman"), ("dogs", "dog"),
            ("children", "child"), ("students", "student"),
            ("players", "player"), ("birds", "bird"), ("friends", "friend")]
ADJS = ["young", "old", "tall", "happy", "quiet", "small", "busy", "tired"]
ADVS = ["quietly", "slowly", "happily", "carefully", "loudly"]
NUMS = ["Two", "Three", "Four", "Five", "Several"]
# base, -ing, past participle, past, object nouns
VERBS = [
    ("sing", "singing", "sung", "sang", ["song", "tune"]),
    ("play", "playing", "played", "played", ["guitar", "piano", "game"]),
    ("read", "reading", "read", "read", ["book", "letter", "newspaper"]),
    ("eat", "eating", "eaten", "ate", ["apple", "sandwich", "cake"]),
    ("write", "writing", "written", "wrote", ["poem", "letter", "report"]),
    ("paint", "painting", "painted", "painted", ["fence", "picture", "wall"]),
    ("watch", "watching", "watched", "watched", ["movie", "game", "show"]),
    ("cook", "cooking", "cooked", "cooked", ["dinner", "soup", "meal"]),
    ("carry", "carrying", "carried", "carried", ["box", "bag", "basket"]),
    ("fix", "fixing", "fixed", "fixed", ["bike", "car", "door"]),
]
PLACES = ["park", "kitchen", "garden", "street", "office", "library"]
MODALS = ["will", "can", "should", "might", "must"]


def add_np(b, plural, rng, allow_pronoun=True):
  """Adds a subject or object noun phrase; returns (head, is_plural)."""
  if allow_pronoun and rng.random() < 0.15:
    word = rng.choice(["He", "She", "They"])
    return b.add(word, "PRON", "PRP", "nsubj", word.lower()), word == "They"
  if plural:
    num_word = rng.choice(NUMS)
    noun, lemma = rng.choice(PL_NOUNS)
    if num_word == "Several":
      num = b.add(num_word, "ADJ", "JJ", "amod", "several")
    else:
      num = b.add(num_word, "NUM", "CD", "nummod")
    head = b.add(noun, "NOUN", "NNS", "nsubj", lemma)
    b.attach(num, head)
    return head, True
  det = b.add(rng.choice(["A", "The", "This"]), "DET", "DT", "det")
  adj = None
  if rng.random() < 0.4:
    adj = b.add(rng.choice(ADJS), "ADJ", "JJ", "amod")
  head = b.add(rng.choice(SG_NOUNS), "NOUN", "NN", "nsubj")
  b.attach(det, head)
  if adj is not None:
    b.attach(adj, head)
  return head, False


def add_object(b, verb_head, nouns, rng):
  det = b.add(rng.choice(["the", "a", "his", "her"]),
              "DET" if rng.random() < 0.7 else "PRON", "DT", "det")
  if b.tokens[det]["text"] in ("his", "her"):
    b.tokens[det].update(pos="PRON", tag="PRP$", dep="poss")
  else:
    b.tokens[det].update(pos="DET", tag="DT", dep="det")
  adj = None
  if rng.random() < 0.3:
    adj = b.add(rng.choice(["new", "long", "big", "red", "old"]), "ADJ", "JJ",
                "amod")
  noun = b.add(rng.choice(nouns), "NOUN", "NN", "dobj")
  b.attach(det, noun)
  if adj is not None:
    b.attach(adj, noun)
  b.attach(noun, verb_head)


def make_sentence(rng):
  b = Builder()
  plural = rng.random() < 0.3
  subject, plural = add_np(b, plural, rng)
  form = rng.choice(["progressive", "modal", "perfect", "past"])
  verb = rng.choice(VERBS)
  aux = neg = None
  if form == "progressive":
    if b.tokens[subject]["text"] == "They" or plural:
      aux = b.add(rng.choice(["are", "were"]), "AUX", "VBP", "aux", "be")
    else:
      aux = b.add(rng.choice(["is", "was"]), "AUX", "VBZ", "aux", "be")
  elif form == "modal":
    aux = b.add(rng.choice(MODALS), "AUX", "MD", "aux")
  elif form == "perfect":
    word = "have" if plural or b.tokens[subject]["text"] == "They" else "has"
    aux = b.add(word, "AUX", "VBZ", "aux", "have")
  if aux is not None and rng.random() < 0.3:
    neg = b.add("not", "PART", "RB", "neg")
  adv = None
  if rng.random() < 0.2:
    adv = b.add(rng.choice(ADVS), "ADV", "RB", "advmod")
  base, ing, part, past, nouns = verb
  text, tag = {"progressive": (ing, "VBG"), "modal": (base, "VB"),
               "perfect": (part, "VBN"), "past": (past, "VBD")}[form]
  root = b.add(text, "VERB", tag, "ROOT", base)
  b.attach(root, root)
  b.attach(subject, root)
  for t in (aux, neg, adv):
    if t is not None:
      b.attach(t, root)
  add_object(b, root, nouns, rng)
  if rng.random() < 0.35:
    cc = b.add("and", "CCONJ", "CC", "cc")
    b.attach(cc, root)
    other = rng.choice([v for v in VERBS if v is not verb])
    base2, ing2, part2, past2, nouns2 = other
    text2 = {"progressive": ing2, "modal": base2, "perfect": part2,
             "past": past2}[form]
    if neg is not None and rng.random() < 0.5:
      neg2 = b.add("not", "PART", "RB", "neg")
    else:
      neg2 = None
    verb2 = b.add(text2, "VERB", tag, "conj", base2)
    b.attach(verb2, root)
    if neg2 is not None:
      b.attach(neg2, verb2)
    add_object(b, verb2, nouns2, rng)
  if rng.random() < 0.4:
    prep = b.add("in", "ADP", "IN", "prep")
    det = b.add("the", "DET", "DT", "det")
    place = b.add(rng.choice(PLACES), "NOUN", "NN", "pobj")
    b.attach(prep, root)
    b.attach(det, place)
    b.attach(place, prep)
  punct = b.add(".", "PUNCT", ".", "punct")
  b.attach(punct, root)
  return b.finish()


SHORT = [
    "He/PRON/PRP/nsubj/1 laughed/VERB/VBD/ROOT/1/laugh ./PUNCT/./punct/1",
    "Dogs/NOUN/NNS/nsubj/1/dog bark/VERB/VBP/ROOT/1 ./PUNCT/./punct/1",
    "Stop/VERB/VB/ROOT/0 !/PUNCT/./punct/0",
    "She/PRON/PRP/nsubj/1 is/AUX/VBZ/ROOT/1/be here/ADV/RB/advmod/1 "
    "./PUNCT/./punct/1",
    "It/PRON/PRP/nsubj/2 will/AUX/MD/aux/2 rain/VERB/VB/ROOT/2 "
    "./PUNCT/./punct/2",
    "Hello/INTJ/UH/ROOT/0",
]


def text_of(tokens):
  out = ""
  for i, t in enumerate(tokens):
    w = t["text"]
    if i > 0 and not (w in ".,!?;:)" or w.startswith("'") or w == "n't"):
      out += " "
    out += w
  return out


def main(argv):
  out_dir = pathlib.Path(argv[1])
  with open(out_dir / "syntactic_sample.jsonl", "w") as f:
    for line in SAMPLE:
      f.write(json.dumps({"tokens": parse_dsl(line)}) + "\n")

  rng = random.Random(20240611)
  seen = set()
  corpus = [parse_dsl(s) for s in SHORT]
  for tokens in corpus:
    seen.add(text_of(tokens))
  while len(corpus) < 500:
    tokens = make_sentence(rng)
    text = text_of(tokens)
    if text in seen:
      continue
    seen.add(text)
    corpus.append(tokens)
  with open(out_dir / "annotated_500.jsonl", "w") as f:
    for i, tokens in enumerate(corpus):
      f.write(json.dumps({"id": f"s{i:03d}", "tokens": tokens}) + "\n")

  # Relation rows: the hypothesis is a generated sentence; the premise adds
  # a trailing clause (entailment) or is the hypothesis minus its negation.
  rows = []
  for i, tokens in enumerate(corpus[len(SHORT):len(SHORT) + 60]):
    hyp = text_of(tokens)
    body = hyp[:-1] if hyp.endswith(".") else hyp
    rows.append({"premise": body + " every weekend.", "hypothesis": hyp,
                 "relation": "entailment", "hypothesis_tokens": tokens})
  negated = [t for t in corpus if any(x["text"] == "not" for x in t)][:40]
  for tokens in negated:
    hyp = text_of(tokens)
    premise = hyp.replace(" not ", " ", 1)
    rows.append({"premise": premise, "hypothesis": hyp,
                 "relation": "negation", "hypothesis_tokens": tokens})
  with open(out_dir / "relations.jsonl", "w") as f:
    for row in rows:
      f.write(json.dumps(row) + "\n")


if __name__ == "__main__":
  main(sys.argv)
