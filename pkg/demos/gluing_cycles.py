"""Walk the 3-face cycles of the single-copy and three-copy cross-polytope gluings."""
from pafiber.hyperbolic_gluing import cycle_decomposition, load_table


def face_label(copy, face):
    return f"{copy}:" + "".join({1: "+", -1: "-", 0: "0"}[s] for s in face.signs)


for name in ("table1", "table4"):
    report = cycle_decomposition(load_table(name))
    print(f"{name}: {report.copies} copies, cycle lengths {report.lengths}")
    for cycle in report.cycles[:3]:
        faces = " -> ".join(face_label(c, f) for c, f in cycle.faces)
        print(f"  {faces}   angle sum {report.angle_sum(cycle)} pi")
    cone = report.cone_faces()
    if cone:
        print("  fixed faces:", ", ".join(face_label(c, f) for c, f in cone))
