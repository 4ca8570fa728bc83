def parse_grid(rows):
    grid = []
    for row in rows:
        cells = []
        for ch in row:
            if ch == '#':
                cells.append(1)
            else:
                cells.append(0)
        grid.append(cells)
    return grid


def neighbors_alive(grid, r, c):
    height = len(grid)
    width = len(grid[0])
    alive = 0
    for dr in range(-1, 2):
        for dc in range(-1, 2):
            if dr == 0 and dc == 0:
                continue
            rr = r + dr
            cc = c + dc
            if 0 <= rr < height and 0 <= cc < width:
                alive = alive + grid[rr][cc]
    return alive


def step(grid):
    height = len(grid)
    width = len(grid[0])
    fresh = [[0] * width for _ in range(height)]
    for r in range(height):
        for c in range(width):
            around = neighbors_alive(grid, r, c)
            if grid[r][c] == 1:
                if around == 2 or around == 3:
                    fresh[r][c] = 1
            else:
                if around == 3:
                    fresh[r][c] = 1
    return fresh


def census(grid):
    # population and a positional digest
    population = 0
    digest = 0
    for r in range(len(grid)):
        for c in range(len(grid[0])):
            if grid[r][c] == 1:
                population = population + 1
                digest = (digest * 31 + r * 16 + c) % 100003
    return population, digest


start_rows = ["........",
              "..###...",
              "...#....",
              ".#...##.",
              ".#...##.",
              "........"]
world = parse_grid(start_rows)
for generation in range(6):
    people, mark = census(world)
    print("gen" + str(generation) + " " + str(people) + " " + str(mark))
    world = step(world)
people, mark = census(world)
print("end " + str(people) + " " + str(mark))
