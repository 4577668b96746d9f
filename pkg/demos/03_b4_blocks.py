"""The SO(9) computation at ell = 3, end to end.

The W(B4) character table is built exactly (wreath product rule), its
3-blocks come from integral central characters, and composing with the
bundled Springer correspondence groups the pairs below the cuspidal orbit
(5,3,1) into defect-0 singletons plus four blocks.
"""

from modspring.springerdata import (
    b4_character_table,
    bundled_springer_table,
    defect_zero_pairs,
    block_pair_partition,
    reproduce_report,
)
from modspring.weylrep import l_blocks

ctab = b4_character_table()
print(f"W(B4): order {ctab.group.order}, {len(ctab.irr_labels)} irreducibles")

blocks = l_blocks(ctab, 3)
defect0 = sorted(lab for lab, d in blocks.defects.items() if d == 0)
print(f"defect-0 characters at ell=3: {defect0}")

stab, _ = bundled_springer_table("B4")
print(f"\ndefect-0 pairs: {sorted(defect_zero_pairs(stab, 3))}")

print("\npositive-defect blocks and their pairs:")
for blk, pairs in block_pair_partition(stab, blocks).items():
    if len(blk) > 1:
        print(f"  block {sorted(blk)}: {sorted(pairs)}")

print()
print(reproduce_report("B4-l3"))
