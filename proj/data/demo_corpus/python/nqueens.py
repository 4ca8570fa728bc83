def solve_n_queens(n):
    def is_safe(board, row, col):
        for i in range(col):
            if board[row][i] == 1:
                return False
        for i, j in zip(range(row, -1, -1),
                        range(col, -1, -1)):
            if board[i][j] == 1:
                return False
        # walk the lower-left diagonal as well
        for i, j in zip(range(row, n, 1),
                        range(col, -1, -1)):
            if board[i][j] == 1:
                return False
        return True

    def place_queen(board, col, collected):
        if col == n:
            collected.append([row[:] for row in board])
            return
        for i in range(n):
            if is_safe(board, i, col):
                board[i][col] = 1
                place_queen(board, col + 1, collected)
                board[i][col] = 0

    board = [[0 for _ in range(n)] for _ in range(n)]
    collected = []
    place_queen(board, 0, collected)
    return collected


def board_signature(arrangement):
    # compact row encoding used for stable output
    digits = []
    for row in arrangement:
        position = 0
        for idx in range(len(row)):
            if row[idx] == 1:
                position = idx + 1
        digits.append(str(position))
    return "".join(digits)


def summarize(sizes):
    lines = []
    for size in sizes:
        answers = solve_n_queens(size)
        signatures = []
        for arrangement in answers:
            signatures.append(board_signature(arrangement))
        signatures.sort()
        lines.append(str(size) + ":" + str(len(answers)) + ":" + ",".join(signatures))
    return lines


for line in summarize([4, 5, 6]):
    print(line)
total_boards = 0
for size in [4, 5, 6]:
    total_boards = total_boards + len(solve_n_queens(size))
print("total " + str(total_boards))
