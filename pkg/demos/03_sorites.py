"""
A longer chain
==============

Arguments are not limited to two premises. Here six symbolic inclusions,
one of them an equality, combine into a five-step chain. Reading the result
back in plain language is left to a ``# reading:`` comment in the file.
"""

from inclusion_diagrams import corpus, decide, emit_ascii, explain, layout_chain

print(corpus.text("bone"))

arg = corpus.load("bone")
v = decide(arg)

###############################################################################
# Each step of the chain records the premise it came from and how that
# premise was rewritten.

for step in v.proof.steps:
    print(step.premise_index + 1, step.rewrite.value)

print(emit_ascii(layout_chain(v.proof)))
print(explain(arg, v))
