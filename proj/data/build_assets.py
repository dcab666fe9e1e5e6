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

"""Extracts the bundled word pairs and lexicons from questions-words.txt.

Usage: python3 build_assets.py questions-words.txt DATA_DIR
"""

import collections
import pathlib
import sys

SECTIONS = {
    "capital-common-countries": ("common_capital", "capital", "country"),
    "capital-world": ("all_capital", "capital", "country"),
    "currency": ("currency", "country", "currency"),
    "city-in-state": ("city_in_state", "city", "state"),
    "family": ("family", "male", "female"),
    "gram6-nationality-adjective": ("nationality_adjective", "country",
                                    "adjective"),
}

# Lexicons for the corpus rules: (section, file, both directions).
LEXICONS = {
    "gram3-comparative": ("comparative_base.tsv", False),
    "gram2-opposite": ("antonyms.tsv", True),
    "gram8-plural": ("plural_singular.tsv", False),
    "gram9-plural-verbs": ("third_singular.tsv", False),
}

# Possessive pronouns cannot fill a subject slot.
EXCLUDED = {("family", "his", "her")}


def main(argv):
  source, out_dir = pathlib.Path(argv[1]), pathlib.Path(argv[2])
  pairs = collections.defaultdict(list)
  section = None
  for line in source.read_text().splitlines():
    if line.startswith(":"):
      section = line[1:].strip()
      continue
    a, b, c, d = line.split()
    for pair in ((a, b), (c, d)):
      if pair not in pairs[section]:
        pairs[section].append(pair)
  data_dir = out_dir
  out_dir = data_dir / "pairs"
  out_dir.mkdir(parents=True, exist_ok=True)
  for section, (name, label_a, label_b) in SECTIONS.items():
    rows = [f"{a}\t{b}\t{label_a}\t{label_b}" for a, b in pairs[section]
            if (name, a, b) not in EXCLUDED]
    (out_dir / f"{name}.tsv").write_text("\n".join(rows) + "\n")
    print(f"{name}: {len(rows)} pairs")
  lexicon_dir = data_dir / "lexicons"
  lexicon_dir.mkdir(parents=True, exist_ok=True)
  for section, (name, symmetric) in LEXICONS.items():
    entries = {}
    for a, b in pairs[section]:
      if section in ("gram3-comparative", "gram8-plural"):
        a, b = b, a  # keyed by the inflected form
      entries.setdefault(a.lower(), b.lower())
      if symmetric:
        entries.setdefault(b.lower(), a.lower())
    rows = [f"{k}\t{v}" for k, v in entries.items()]
    (lexicon_dir / name).write_text("\n".join(rows) + "\n")
    print(f"{name}: {len(rows)} entries")


if __name__ == "__main__":
  main(sys.argv)
