def insertion_sort(values):
    data = values[:]
    for i in range(1, len(data)):
        current = data[i]
        j = i - 1
        while j >= 0 and data[j] > current:
            data[j + 1] = data[j]
            j = j - 1
        data[j + 1] = current
    return data


def merge_sort(values):
    if len(values) <= 1:
        return values[:]
    middle = len(values) // 2
    left = merge_sort(values[:middle])
    right = merge_sort(values[middle:])
    merged = []
    li = 0
    ri = 0
    while li < len(left) and ri < len(right):
        if left[li] <= right[ri]:
            merged.append(left[li])
            li = li + 1
        else:
            merged.append(right[ri])
            ri = ri + 1
    while li < len(left):
        merged.append(left[li])
        li = li + 1
    while ri < len(right):
        merged.append(right[ri])
        ri = ri + 1
    return merged


def inversions(values):
    # counts out-of-order pairs in the original sequence
    count = 0
    for i in range(len(values)):
        for j in range(i + 1, len(values)):
            if values[i] > values[j]:
                count = count + 1
    return count


def generate_sequence(length, seed):
    sequence = []
    state = seed
    for _ in range(length):
        state = (state * 131 + 7) % 251
        sequence.append(state)
    return sequence


sample = generate_sequence(18, 3)
print("raw " + ",".join(str(v) for v in sample))
print("ins " + ",".join(str(v) for v in insertion_sort(sample)))
print("mrg " + ",".join(str(v) for v in merge_sort(sample)))
print("inv " + str(inversions(sample)))
agree = insertion_sort(sample) == merge_sort(sample)
print("agree " + str(agree))
