"""
Worked examples
===============

Every argument in the bundled corpus is decided by looking for a chain of
inclusions that runs from the conclusion's subject to its predicate. This
script decides each one and prints the chain, innermost set first.
"""

from inclusion_diagrams import corpus, decide

###############################################################################
# Load an argument and look at what the parser produced.

arg = corpus.load("example01")
for p in arg.premises:
    print("premise:   ", p.text)
print("conclusion:", arg.conclusion.text)

###############################################################################
# ``decide`` returns a verdict. A valid verdict carries a proof whose
# ``labels`` are the sets of the diagram.

v = decide(arg)
print(v.status, "|", " ⊆ ".join(v.proof.labels))
print("reads as:", v.proof.conclusion_reading)

###############################################################################
# The whole corpus.

for name in corpus.EXAMPLES:
    v = decide(corpus.load(name))
    print(f"{name}: {v.status:7} {' ⊆ '.join(v.proof.labels)}")
