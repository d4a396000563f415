"""Dimensions of the degree-3 and degree-4 identity spaces for every canonical label."""
from evo2d.classify import canonical_matrix
from evo2d.exactmath import QQ_FIELD
from evo2d.identities import identity_space

DEFAULT_PARAMS = {"A2": (2,), "A3": (2,), "A4": (2,), "A5ab": (2, 3), "A8": (2,)}
LABELS = ("A0", "A1", "A2", "A3", "A4", "A5ab", "A5", "A6", "A7", "A8")


def main():
    print(f"{'label':<6}{'deg 3':>6}{'deg 4':>6}")
    for label in LABELS:
        M = canonical_matrix(label, QQ_FIELD, *DEFAULT_PARAMS.get(label, ()))
        d3, d4 = (len(identity_space(M, d)) for d in (3, 4))
        print(f"{label:<6}{d3:>6}{d4:>6}")


if __name__ == "__main__":
    main()
