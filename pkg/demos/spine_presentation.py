"""Read a presentation of the fundamental group off the dual spine and abelianize it."""
from pafiber.cell_complexes import build_spine
from pafiber.cell_complexes.spine import presentation_from_spine, twelve_generator_presentation

spine = build_spine()
print("spine cells by dimension:", spine.census())

for label, pres in (("spine", presentation_from_spine()), ("twelve generators", twelve_generator_presentation())):
    print(f"{label}: {len(pres.generators)} generators, {len(pres.relators)} relators")
    print("  first relator:", pres.show(pres.relators[0]))
    print("  H_1 (free rank, torsion):", pres.abelianization())
