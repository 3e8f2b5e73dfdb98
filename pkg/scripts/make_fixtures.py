"""Regenerate the JSON fixtures in fixtures/ from lvmb.catalog."""

from pathlib import Path

from lvmb import catalog as C
from lvmb import documents as D

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    OUT.mkdir(exist_ok=True)
    docs = {
        "example1.json": D.from_fundamental_set(C.square_family()),
        "example3.json": D.from_good_system(C.square_system()),
        "p3.json": D.from_good_system(C.p_system(3)),
        "p4.json": D.from_good_system(C.p_system(4)),
        "disjoint_hull.json": D.from_good_system(C.disjoint_hulls()),
        "two_triangles.json": D.from_fundamental_set(C.two_triangles()),
        "single_subset.json": D.from_fundamental_set(C.single_subset()),
        "square.json": D.from_sphere(C.square()),
        "segment.json": D.from_sphere(C.segment()),
        "triangle.json": D.from_sphere(C.triangle()),
        "octahedron.json": D.from_sphere(C.octahedron()),
        "halfplane.json": D.from_sphere(C.halfplane()),
    }
    for name, doc in docs.items():
        (OUT / name).write_text(D.dumps(doc))
        print("wrote", OUT / name)


if __name__ == "__main__":
    main()
