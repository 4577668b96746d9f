"""The E8 computation at ell = 7 from ingested data.

The bundled W(E8) character table (validated by exact orthogonality on
load) yields the 7-blocks through the same code path as B4.  Restricted
to the closure of the cuspidal orbit E8(a7), forty-five pairs have defect
0 and the remaining fourteen group into four blocks.  The bundled
W(E7) table and class fusion reproduce the induction of the trivial
character that drives the block bookkeeping.
"""

from modspring.springerdata import (
    bundled_character_table,
    bundled_fusion,
    bundled_springer_table,
    data_text,
    defect_zero_pairs,
    load_orbit_meta,
    reproduce_report,
)
from modspring.weylrep import induce_character, l_blocks

stab, ctab = bundled_springer_table("E8")
print(f"W(E8): order {ctab.group.order}, {len(ctab.irr_labels)} irreducibles")

blocks = l_blocks(ctab, 7)
posdef = [b for b in blocks.blocks if len(b) > 1]
print(f"7-blocks: {len(blocks.blocks)} total; positive-defect sizes "
      f"{sorted(len(b) for b in posdef)}")

meta = load_orbit_meta(data_text("e8_orbits.tsv"))
x = set(meta.strictly_below("E8(a7)"))
on_x = [pair for pair in stab.pairs() if pair[0] in x]
print(f"closure of E8(a7): {len(x)} orbits, {len(on_x)} pairs")
print(f"defect-0 pairs there: {len(defect_zero_pairs(stab, 7, x))}")

we7 = bundled_character_table("we7_table.tsv")
fusion = bundled_fusion("e7e8_fusion.tsv")
ind = induce_character(we7, ctab, fusion, "1_0")
print(f"\nInd_W(E7)^W(E8) of the trivial character: {sorted(ind)}")

print()
print(reproduce_report("E8-l7"))
