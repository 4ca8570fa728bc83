def edit_distance(source, target):
    rows = len(source) + 1
    cols = len(target) + 1
    grid = [[0] * cols for _ in range(rows)]
    for r in range(rows):
        grid[r][0] = r
    for c in range(cols):
        grid[0][c] = c
    for r in range(1, rows):
        for c in range(1, cols):
            if source[r - 1] == target[c - 1]:
                grid[r][c] = grid[r - 1][c - 1]
            else:
                delete_cost = grid[r - 1][c] + 1
                insert_cost = grid[r][c - 1] + 1
                swap_cost = grid[r - 1][c - 1] + 1
                best = delete_cost
                if insert_cost < best:
                    best = insert_cost
                if swap_cost < best:
                    best = swap_cost
                grid[r][c] = best
    return grid[rows - 1][cols - 1]


def longest_common_prefix(words):
    if len(words) == 0:
        return ""
    shortest = words[0]
    for word in words:
        if len(word) < len(shortest):
            shortest = word
    length = 0
    for idx in range(len(shortest)):
        matched = True
        for word in words:
            if word[idx] != shortest[idx]:
                matched = False
        if matched and length == idx:
            length = length + 1
    return shortest[:length]


def mirror_score(text):
    # compares the text with its reversal position by position
    score = 0
    flipped = text[::-1]
    for idx in range(len(text)):
        if text[idx] == flipped[idx]:
            score = score + 1
    return score


pairs = [("kitten", "sitting"), ("flaw", "lawn"), ("gumbo", "gambol"), ("", "abc")]
for left, right in pairs:
    print("ed " + left + ":" + right + " " + str(edit_distance(left, right)))
groups = [["interspecies", "interstellar", "interstate"], ["throne", "throne"], ["prefix"]]
for group in groups:
    print("lcp " + longest_common_prefix(group))
for sample in ["level", "rotator", "palindrome"]:
    print("mirror " + sample + " " + str(mirror_score(sample)))
