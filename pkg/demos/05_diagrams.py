"""
Drawing diagrams
================

A proof chain becomes nested rectangles. The SVG files land in a
``diagrams`` directory next to where the script is run.
"""

from pathlib import Path

from inclusion_diagrams import corpus, decide, emit_ascii, emit_svg, layout_chain

out = Path("diagrams")
out.mkdir(exist_ok=True)

for name in ("example03", "example12", "bone"):
    layout = layout_chain(decide(corpus.load(name)).proof)
    print(emit_ascii(layout))
    (out / f"{name}.svg").write_text(emit_svg(layout), encoding="utf-8")

###############################################################################
# The layout is plain data, so other renderers can use it directly.

for box in layout.boxes:
    print(box)
print("canvas", layout.canvas)
