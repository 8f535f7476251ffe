# Copyright (c) 2026, bernlab developers
# BSD 3-Clause License, see COPYING

from bernlab import generators
from bernlab import powersum
from bernlab.bench import call_profiler, profile_function
from bernlab.generators import Convention


@profile_function
def profile_de_moivre(upto):
    return generators.gen_de_moivre(upto)


@profile_function
def profile_euler_conv(upto):
    return generators.gen_euler_convolution(upto)


@profile_function
def profile_egf(upto):
    return generators.gen_egf_reciprocal(upto)


@profile_function
def profile_matrix_inv(upto):
    return generators.gen_matrix_inverse(upto)


@profile_function
def profile_det_hammond(upto):
    return generators.gen_determinant(
        upto, generators.DeterminantVariant.HAMMOND)


@profile_function
def profile_closed_form(p):
    return powersum.build_closed_form(p, Convention.PLUS)


@profile_function
def profile_pascal(p):
    return powersum.build_pascal(p, Convention.PLUS)


@profile_function
def profile_prouhet(p):
    return powersum.build_prouhet(p, Convention.PLUS)


def print_res(res, base):
    out = {}
    for r in res:
        name = r["name"]
        time = r["total_time"] / r["count"]
        out[name] = time

    def print_row(*cols):
        print(str.format("| {:30s} | {:15s} | {:15s} |", *(cols[0:3])))

    print_row('func', 'per call (ms)', 'cmp to ' + base)
    print_row('-' * 30, '-' * 15, '-' * 15)
    basetime = out["profile_" + base]
    for k, v in out.items():
        print_row(f"{k:8s}", f"{v:.3E}", f"{v/basetime:.3f}")

    print()


def main():

    it = 5

    for upto in (20, 60, 120):
        print(f"## Bernoulli generators up to B_{upto}\n")
        call_profiler.reset()
        for _ in range(it):
            generators.clear_cache()
            profile_de_moivre(upto)
            profile_euler_conv(upto)
            profile_egf(upto)
            profile_matrix_inv(upto)
        print_res(call_profiler.result()["children"], "de_moivre")

    # The determinant grows with n^3 big-rational steps.
    for upto in (10, 20, 30):
        print(f"## Determinant against recurrence up to B_{upto}\n")
        call_profiler.reset()
        for _ in range(it):
            profile_de_moivre(upto)
            profile_det_hammond(upto)
        print_res(call_profiler.result()["children"], "de_moivre")

    for p in (10, 30, 60):
        print(f"## Power-sum builders for p = {p}\n")
        call_profiler.reset()
        for _ in range(it):
            generators.clear_cache()
            profile_closed_form(p)
            profile_pascal(p)
            profile_prouhet(p)
        print_res(call_profiler.result()["children"], "closed_form")


if __name__ == '__main__':
    main()

# vim: set ff=unix fenc=utf8 et sw=4 ts=4 sts=4:
