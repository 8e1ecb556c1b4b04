# Copyright 2026 The Semlift Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates fixtures/search/labels100.ttl. Run once; the output is committed."""
import random

rng = random.Random(20261018)
stems = ["wa", "was", "wat", "eth", "etha", "meth", "prop", "benz", "säur", "acé", "alk", "chlor", "naph", "tolu", "gly"]
tails = ["ter", "ser", "anol", "ane", "ene", "ol", "yl", "ide", "ure", "ate", "in", "ón", " acid", " gas", "  oil"]
langs = ["en", "de", "fr", None]
preds = ["rdfs:label", "skos:prefLabel", "skos:altLabel"]
lines = [
    "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .",
    "@prefix skos: <http://www.w3.org/2004/02/skos/core#> .",
    "@prefix dcterms: <http://purl.org/dc/terms/> .",
    "@prefix : <http://example.org/labels/> .",
    "",
    ':W rdfs:label "water"@en, "Wasser"@de .',
]
count = 2
seen = set()
while count < 100:
    c = rng.randrange(40)
    surface = rng.choice(stems) + rng.choice(tails)
    if rng.random() < 0.3:
        surface = surface.capitalize()
    lang = rng.choice(langs)
    lit = '"%s"' % surface + ("@" + lang if lang else "")
    key = (c, surface, lang, p := rng.choice(preds))
    if key in seen:
        continue
    seen.add(key)
    lines.append(":c%02d %s %s ." % (c, p, lit))
    count += 1
for c in range(0, 40, 4):
    lines.append(':c%02d dcterms:description "water note %d"@en .' % (c, c))
    lines.append(':c%02d rdfs:comment "was ignored %d" .' % (c, c))
print("\n".join(lines))
