"""
===========================================
Quadratic duals and Manin products
===========================================

Dimensions of graded components for a handful of small quadratic
algebras, their duals, and the white and black products.  The white
product is the degreewise tensor product, so its dims multiply.
"""
from maninkit import quadalg
from maninkit.exactlin import QQ

algebras = {
    "free2": quadalg.free_algebra(QQ, 2),
    "poly2": quadalg.symmetric_algebra(QQ, 2),
    "qp3": quadalg.quantum_plane(QQ, 3),
    "dual": quadalg.dual_numbers(QQ),
}

N = 4
print(f"{'algebra':10} {'dims':20} dual dims")
for name, A in algebras.items():
    D = quadalg.quadratic_dual(A)
    print(f"{name:10} {str(A.dims(N)):20} {D.dims(N)}")

# white product: presentation vs the componentwise definition
A, B = algebras["qp3"], algebras["poly2"]
W = quadalg.white_product(A, B)
print("\nqp3 o poly2 :", W.dims(N))
print("product    :", tuple(A.dim(k) * B.dim(k) for k in range(N + 1)))

# black product and cohom: cohom(A, B) = A^! * B
K = quadalg.black_product(quadalg.quadratic_dual(A), B)
print("qp3^! * poly2:", K.dims(3))
