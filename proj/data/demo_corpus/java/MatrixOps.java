public class MatrixOps {
    static int[][] buildMatrix(int rows, int cols, int seed) {
        int[][] grid = new int[rows][cols];
        int state = seed;
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                state = (state * 37 + 11) % 97;
                grid[r][c] = state;
            }
        }
        return grid;
    }

    static int[][] multiply(int[][] left, int[][] right) {
        int rows = left.length;
        int inner = right.length;
        int cols = right[0].length;
        int[][] product = new int[rows][cols];
        for (int r = 0; r < rows; r++) {
            for (int c = 0; c < cols; c++) {
                int acc = 0;
                for (int k = 0; k < inner; k++) {
                    acc = acc + left[r][k] * right[k][c];
                }
                product[r][c] = acc;
            }
        }
        return product;
    }

    static int[][] transpose(int[][] grid) {
        int[][] flipped = new int[grid[0].length][grid.length];
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[0].length; c++) {
                flipped[c][r] = grid[r][c];
            }
        }
        return flipped;
    }

    // folds all cells row by row into one digest value
    static long checksum(int[][] grid) {
        long digest = 0;
        for (int r = 0; r < grid.length; r++) {
            for (int c = 0; c < grid[0].length; c++) {
                digest = (digest * 7 + grid[r][c]) % 1000003;
            }
        }
        return digest;
    }

    static int trace(int[][] grid) {
        int total = 0;
        for (int i = 0; i < grid.length; i++) {
            total = total + grid[i][i];
        }
        return total;
    }

    public static void main(String[] args) {
        int[][] a = buildMatrix(4, 3, 5);
        int[][] b = buildMatrix(3, 4, 9);
        int[][] p = multiply(a, b);
        int[][] t = transpose(p);
        System.out.println("a " + checksum(a));
        System.out.println("b " + checksum(b));
        System.out.println("p " + checksum(p));
        System.out.println("t " + checksum(t));
        System.out.println("trace " + trace(p));
        System.out.println("sym " + checksum(multiply(t, p)));
    }
}
