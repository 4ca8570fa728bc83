public class Knapsack {
    static int[][] fillTable(int[] weights, int[] values, int capacity) {
        int items = weights.length;
        int[][] table = new int[items + 1][capacity + 1];
        for (int i = 1; i <= items; i++) {
            for (int cap = 0; cap <= capacity; cap++) {
                int best = table[i - 1][cap];
                if (weights[i - 1] <= cap) {
                    int candidate = table[i - 1][cap - weights[i - 1]] + values[i - 1];
                    if (candidate > best) {
                        best = candidate;
                    }
                }
                table[i][cap] = best;
            }
        }
        return table;
    }

    static String selectedItems(int[][] table, int[] weights, int capacity) {
        StringBuilder picks = new StringBuilder();
        int cap = capacity;
        int i = weights.length;
        while (i > 0) {
            if (table[i][cap] != table[i - 1][cap]) {
                if (picks.length() > 0) {
                    picks.insert(0, " ");
                }
                picks.insert(0, "#" + (i - 1));
                cap = cap - weights[i - 1];
            }
            i = i - 1;
        }
        return picks.toString();
    }

    // digest of one dynamic-programming row
    static int rowDigest(int[][] table, int row) {
        int digest = 0;
        for (int cap = 0; cap < table[row].length; cap++) {
            digest = (digest * 3 + table[row][cap]) % 99991;
        }
        return digest;
    }

    static int totalWeight(int[][] table, int[] weights, int capacity) {
        int cap = capacity;
        int carried = 0;
        int i = weights.length;
        while (i > 0) {
            if (table[i][cap] != table[i - 1][cap]) {
                carried = carried + weights[i - 1];
                cap = cap - weights[i - 1];
            }
            i = i - 1;
        }
        return carried;
    }

    public static void main(String[] args) {
        int[] itemWeights = {3, 4, 5, 8, 10, 2, 6, 7};
        int[] itemValues = {9, 11, 13, 23, 29, 5, 15, 19};
        int limit = 20;
        int[][] grid = fillTable(itemWeights, itemValues, limit);
        System.out.println("best " + grid[itemWeights.length][limit]);
        System.out.println("picked " + selectedItems(grid, itemWeights, limit));
        System.out.println("weight " + totalWeight(grid, itemWeights, limit));
        System.out.println("row4 " + rowDigest(grid, 4));
        System.out.println("row8 " + rowDigest(grid, 8));
    }
}
