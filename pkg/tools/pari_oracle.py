"""Independent reference values from PARI/GP (needs cypari2, not a package dependency).

Writes tests/fixtures/pari_oracle.json with, for every canonical cube-free
radicand 2 <= d < LIMIT: discriminant, class group, regulator, fundamental
unit (coefficients of 1, theta, theta^2), the principal products of totally
ramified primes and their F_3-rank, and the zeta_3-norm invariant of the
sextic closure.  Both class groups are certified with bnfcertify.

    python3 tools/pari_oracle.py [LIMIT]
"""

import json
import sys
from pathlib import Path

import cypari2

GP = r"""
projvecs(t) = {
  my(out = List());
  forvec(v = vector(t, i, [0, 2]),
    my(k = 1); while (k <= t && v[k] == 0, k++);
    if (k <= t && v[k] == 1, listput(out, v)));
  Vec(out);
}

/* real embedding at high precision: units have huge coefficients and cancel */
realval(f, d) = localprec(2000); subst(f, x, real(sqrtn(d, 3)));

oracle(d) = {
  my(bnf = bnfinit(x^3 - d, 1), cert = bnfcertify(bnf));
  my(fu = lift(bnf.fu[1]));
  if (abs(realval(fu, d)) < 1, fu = lift(Mod(fu, x^3 - d)^-1));
  if (realval(fu, d) < 0, fu = -fu);
  my(pr = List());
  foreach (vecsort(setunion([3], factor(d)[, 1]~)), q,
    foreach (idealprimedec(bnf, q), P, if (P.e == 3, listput(pr, P))));
  pr = Vec(pr);
  my(prin = List());
  foreach (projvecs(#pr), v,
    my(I = 1);
    for (i = 1, #pr, if (v[i], I = idealmul(bnf, I, idealpow(bnf, pr[i], v[i]))));
    if (bnfisprincipal(bnf, I, 0) == 0, listput(prin, v)));
  prin = Vec(prin);
  my(A = if (#prin, #matimage(Mod(matconcat(prin~), 3)), 0));
  my(K = nfinit(y^2 + y + 1), rnf = rnfinit(K, x^3 - d));
  my(bnfN = bnfinit(rnf.polabs, 1), certN = bnfcertify(bnfN));
  my(gens = concat([bnfN.tu[2]], bnfN.fu), norms = vector(#gens));
  for (i = 1, #gens,
    norms[i] = lift(rnfeltnorm(rnf, rnfeltabstorel(rnf, lift(gens[i])))));
  my(w = Mod(y, y^2 + y + 1), U = 1);
  forvec(e = vector(#gens, i, [0, 5]),
    if (prod(i = 1, #gens, Mod(norms[i], y^2 + y + 1)^e[i]) == w, U = 0; break));
  [bnf.disc, bnf.no, bnf.cyc, bnf.reg, Vec(Polrev(Vecrev(fu, 3)), 3), #pr, prin, A,
   apply(n -> Str(n), norms), U, cert == 1 && certN == 1];
}
"""


def canonical_cube_free(pari, d: int) -> bool:
    fac = pari.factor(d)
    a = b = 1
    for q, e in zip(fac[0], fac[1]):
        if int(e) >= 3:
            return False
        if int(e) == 1:
            a *= int(q)
        else:
            b *= int(q)
    return d <= a * a * b


def main():
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    pari = cypari2.Pari()
    pari.allocatemem(2 * 10**9, silent=True)
    pari.default("parisizemax", 4 * 10**9)
    for line in GP.strip().split("\n\n"):
        pari(line.replace("\n", " "))
    out = []
    for d in range(2, limit):
        if not canonical_cube_free(pari, d):
            continue
        disc, h, cyc, reg, fu, t, prin, A, norms, U, cert = pari(f"oracle({d})")
        rec = {
            "d": d,
            "disc": int(disc),
            "h": int(h),
            "cyc": [int(c) for c in cyc],
            "regulator": float(reg),
            "unit": [str(c) for c in reversed(list(fu))],
            "ramified": int(t),
            "principal_vectors": [[int(x) for x in v] for v in prin],
            "A": int(A),
            "unit_norms": [str(n) for n in norms],
            "U": int(U),
            "certified": bool(cert),
        }
        print(d, rec["h"], rec["cyc"], round(rec["regulator"], 5), rec["A"], rec["U"], rec["certified"], flush=True)
        out.append(rec)
    path = Path(__file__).resolve().parents[1] / "tests" / "fixtures" / "pari_oracle.json"
    path.write_text(json.dumps(out, indent=1) + "\n")


if __name__ == "__main__":
    main()
