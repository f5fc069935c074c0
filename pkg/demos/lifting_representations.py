"""
==========================================
Translating representations into coreps
==========================================

A representation of a finite-dimensional algebra M on V becomes a
corepresentation of the comonoid F(M) on the quadratic algebra F(V),
for F = T* (tensor algebra of the dual) or S* (symmetric algebra).
"""
from maninkit import coreps, translate
from maninkit.exactlin import QQ

# K[t]/(t^2) acting on K^2 by the nilpotent matrix unit
M, rho, nV = translate.dual_numbers_rep(QQ)

for F in (translate.tstar(QQ), translate.sstar(QQ)):
    w = translate.lift_rep(F, rho, nV)
    C = translate.comon_of_contravariant(F, M)
    ok = not coreps.corep_check(w, C, F.obj(nV), 3)
    iso = translate.phi_transform(F, nV, nV).iso_by_degree(3)
    print(f"{F.name}: corep laws to degree 3 {'hold' if ok else 'fail'}; Phi iso by degree {iso}")

# T* is strong, so tensor products of reps go to tensor products of coreps
H, sign, n1 = translate.sign_rep(QQ)
fails = translate.verify_lift_monoidality(translate.tstar(QQ), H, sign, n1, sign, n1, 3)
print("lift(sign (x) sign) vs lift(sign) o lift(sign):", "iso" if not fails else fails)

# S* is only colax: F(V (x) W) is bigger than F(V) o F(W)
big, small = translate.dims_comparison(translate.sstar(QQ), 2, 2, 3)
print("S*(K^4) dims", big, "vs S*(K^2) o S*(K^2) dims", small)
