"""
All 256 syllogistic forms
=========================

Four moods per premise and conclusion and four figures give 256 forms. The
chain solver and the brute-force model search are run on every one of them
and must agree.
"""

import collections

from inclusion_diagrams import classify_all_forms

rows = classify_all_forms()
print(len(rows), "forms,", sum(r.agree for r in rows), "agree")

###############################################################################
# The valid ones, grouped by figure.

by_figure = collections.defaultdict(list)
for r in rows:
    if r.oracle_valid:
        by_figure[r.figure].append(r.mood)
for figure in sorted(by_figure):
    print(f"figure {figure}: {' '.join(by_figure[figure])}")
