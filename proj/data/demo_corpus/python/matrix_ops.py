def build_matrix(rows, cols, seed):
    matrix = []
    value = seed
    for r in range(rows):
        row = []
        for c in range(cols):
            value = (value * 31 + 17) % 101
            row.append(value)
        matrix.append(row)
    return matrix


def transpose(matrix):
    rows = len(matrix)
    cols = len(matrix[0])
    flipped = [[0] * rows for _ in range(cols)]
    for r in range(rows):
        for c in range(cols):
            flipped[c][r] = matrix[r][c]
    return flipped


def multiply(left, right):
    rows = len(left)
    inner = len(right)
    cols = len(right[0])
    product = [[0] * cols for _ in range(rows)]
    for r in range(rows):
        for c in range(cols):
            acc = 0
            for k in range(inner):
                acc = acc + left[r][k] * right[k][c]
            product[r][c] = acc
    return product


def trace(matrix):
    # sum of the main diagonal
    total = 0
    for i in range(len(matrix)):
        total = total + matrix[i][i]
    return total


def parity_profile(matrix):
    evens = 0
    marked = 0
    for r in range(len(matrix)):
        for c in range(len(matrix[0])):
            if matrix[r][c] % 2 == 0:
                evens = evens + 1
            if r == c and matrix[r][c] % 3 == 0:
                marked = marked + 1
    return evens, marked


def count_above(matrix, limit):
    tally = 0
    for r in range(len(matrix)):
        for c in range(len(matrix[0])):
            if matrix[r][c] > limit:
                tally = tally + 1
    return tally


def off_diagonal_load(matrix):
    load = 0
    for i in range(len(matrix)):
        for c in range(len(matrix[0])):
            if c != i:
                load = load + matrix[i][c]
    return load


def corner_weight(matrix):
    upper = 0
    lower = 0
    for r in range(len(matrix)):
        for c in range(len(matrix[0])):
            if r > c:
                lower = lower + matrix[r][c]
            if r < c:
                upper = upper + matrix[r][c]
    return upper, lower


def checksum(matrix):
    digest = 0
    for row in matrix:
        for cell in row:
            digest = (digest * 7 + cell) % 1000003
    return digest


a = build_matrix(4, 3, 5)
b = build_matrix(3, 4, 9)
p = multiply(a, b)
t = transpose(p)
print("a " + str(checksum(a)))
print("b " + str(checksum(b)))
print("p " + str(checksum(p)))
print("t " + str(checksum(t)))
print("trace " + str(trace(p)))
print("sym " + str(checksum(multiply(t, p))))
print("hot " + str(count_above(p, 8000)))
print("load " + str(off_diagonal_load(p)))
up, low = corner_weight(p)
print("corners " + str(up) + "/" + str(low))
even_cells, marked_cells = parity_profile(p)
print("parity " + str(even_cells) + "/" + str(marked_cells))
