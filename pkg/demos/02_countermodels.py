"""
Invalid arguments and countermodels
===================================

When no chain exists the argument is reported invalid, and a small model is
searched for in which every premise holds and the conclusion fails.
"""

from inclusion_diagrams import corpus, decide, eval_proposition, explain

arg = corpus.load("invalid_syllogism")
v = decide(arg)
print(v.status)

###############################################################################
# The countermodel assigns a finite set to each term.

for term, members in v.countermodel.to_json().items():
    print(f"  {term} = {{{', '.join(members)}}}")

###############################################################################
# Check it by hand: premises true, conclusion false.

print([eval_proposition(p, v.countermodel) for p in arg.premises])
print(eval_proposition(arg.conclusion, v.countermodel))

###############################################################################
# The trace says the same thing in prose.

print(explain(arg, v))
