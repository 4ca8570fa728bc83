def horner_eval(coefficients, x):
    result = 0
    for coefficient in coefficients:
        result = result * x + coefficient
    return result


def poly_add(left, right):
    size = max(len(left), len(right))
    padded_left = [0] * (size - len(left)) + left
    padded_right = [0] * (size - len(right)) + right
    total = []
    for idx in range(size):
        total.append(padded_left[idx] + padded_right[idx])
    return total


def poly_multiply(left, right):
    product = [0] * (len(left) + len(right) - 1)
    for i in range(len(left)):
        for j in range(len(right)):
            product[i + j] = product[i + j] + left[i] * right[j]
    return product


def derivative(coefficients):
    # power rule applied to descending coefficients
    degree = len(coefficients) - 1
    slope = []
    for idx in range(len(coefficients) - 1):
        slope.append(coefficients[idx] * (degree - idx))
    return slope


def format_poly(coefficients):
    labels = []
    degree = len(coefficients) - 1
    for idx in range(len(coefficients)):
        labels.append(str(coefficients[idx]) + "x" + str(degree - idx))
    return "+".join(labels)


p = [2, -3, 0, 5]
q = [1, 4, -2]
print("p(3) " + str(horner_eval(p, 3)))
print("q(3) " + str(horner_eval(q, 3)))
s = poly_add(p, q)
print("sum " + format_poly(s))
m = poly_multiply(p, q)
print("prod " + format_poly(m))
d = derivative(p)
print("deriv " + format_poly(d))
print("prod(2) " + str(horner_eval(m, 2)))
check = horner_eval(p, 2) * horner_eval(q, 2)
print("check " + str(check))
table = []
for x in range(-2, 5):
    table.append(str(horner_eval(p, x)))
print("sweep " + ",".join(table))
positive = 0
for x in range(-2, 5):
    if horner_eval(p, x) > 0:
        positive = positive + 1
print("positive " + str(positive))
