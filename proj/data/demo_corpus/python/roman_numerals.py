def to_roman(number):
    table = [(1000, "M"), (900, "CM"), (500, "D"), (400, "CD"),
             (100, "C"), (90, "XC"), (50, "L"), (40, "XL"),
             (10, "X"), (9, "IX"), (5, "V"), (4, "IV"), (1, "I")]
    remaining = number
    parts = []
    for value, token in table:
        while remaining >= value:
            parts.append(token)
            remaining = remaining - value
    return "".join(parts)


def from_roman(text):
    values = {"I": 1, "V": 5, "X": 10, "L": 50,
              "C": 100, "D": 500, "M": 1000}
    total = 0
    idx = 0
    while idx < len(text):
        current = values[text[idx]]
        if idx + 1 < len(text) and values[text[idx + 1]] > current:
            total = total + values[text[idx + 1]] - current
            idx = idx + 2
        else:
            total = total + current
            idx = idx + 1
    return total


def roundtrip_errors(limit):
    # any mismatch here indicates a conversion defect
    broken = 0
    for number in range(1, limit + 1):
        if from_roman(to_roman(number)) != number:
            broken = broken + 1
    return broken


samples = [9, 14, 40, 90, 444, 1987, 2024, 3999]
for sample in samples:
    print(str(sample) + " " + to_roman(sample))
texts = ["XLII", "MCMXC", "CDXLIV", "MMXXV"]
for text in texts:
    print(text + " " + str(from_roman(text)))
print("errors " + str(roundtrip_errors(500)))
longest = 0
for number in range(1, 500):
    length = len(to_roman(number))
    if length > longest:
        longest = length
print("longest " + str(longest))
letter_budget = 0
for number in range(1, 100):
    letter_budget = letter_budget + len(to_roman(number))
print("letters " + str(letter_budget))
nines = []
for number in [9, 99, 399, 499]:
    nines.append(to_roman(number))
print("nines " + ",".join(nines))
