public class GridAutomaton {
    static int[][] parseGrid(String[] rows) {
        int[][] grid = new int[rows.length][rows[0].length()];
        for (int r = 0; r < rows.length; r++) {
            for (int c = 0; c < rows[r].length(); c++) {
                if (rows[r].charAt(c) == '#') {
                    grid[r][c] = 1;
                }
            }
        }
        return grid;
    }

    static int neighborsAlive(int[][] grid, int row, int col) {
        int alive = 0;
        for (int dr = -1; dr <= 1; dr++) {
            for (int dc = -1; dc <= 1; dc++) {
                if (dr == 0 && dc == 0) {
                    continue;
                }
                int rr = row + dr;
                int cc = col + dc;
                if (rr >= 0 && rr < grid.length && cc >= 0 && cc < grid[0].length) {
                    alive = alive + grid[rr][cc];
                }
            }
        }
        return alive;
    }

    static int[][] step(int[][] grid) {
        int[][] fresh = new int[grid.length][grid[0].length];
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[0].length; c++) {
                int around = neighborsAlive(grid, r, c);
                if (grid[r][c] == 1) {
                    if (around == 2 || around == 3) {
                        fresh[r][c] = 1;
                    }
                } else {
                    if (around == 3) {
                        fresh[r][c] = 1;
                    }
                }
            }
        }
        return fresh;
    }

    // population plus a stable positional digest
    static long census(int[][] grid) {
        long digest = 0;
        int population = 0;
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[0].length; c++) {
                if (grid[r][c] == 1) {
                    population = population + 1;
                    digest = (digest * 31 + r * 16 + c) % 100003;
                }
            }
        }
        return digest * 1000 + population;
    }

    public static void main(String[] args) {
        String[] startRows = {"........", "..###...", "...#....",
                              ".#...##.", ".#...##.", "........"};
        int[][] world = parseGrid(startRows);
        for (int generation = 0; generation < 6; generation++) {
            long mark = census(world);
            System.out.println("gen" + generation + " " + (mark % 1000) + " " + (mark / 1000));
            world = step(world);
        }
        long finalMark = census(world);
        System.out.println("end " + (finalMark % 1000) + " " + (finalMark / 1000));
    }
}
