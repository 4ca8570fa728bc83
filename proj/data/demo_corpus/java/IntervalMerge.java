public class IntervalMerge {
    static int[][] sortBookings(int[][] bookings) {
        int[][] data = new int[bookings.length][2];
        for (int i = 0; i < bookings.length; i++) {
            data[i][0] = bookings[i][0];
            data[i][1] = bookings[i][1];
        }
        for (int i = 1; i < data.length; i++) {
            int[] current = data[i];
            int j = i - 1;
            while (j >= 0 && (data[j][0] > current[0]
                    || (data[j][0] == current[0] && data[j][1] > current[1]))) {
                data[j + 1] = data[j];
                j = j - 1;
            }
            data[j + 1] = current;
        }
        return data;
    }

    static int[][] merge(int[][] bookings) {
        int[][] ordered = sortBookings(bookings);
        int[][] scratch = new int[ordered.length][2];
        int used = 0;
        for (int i = 0; i < ordered.length; i++) {
            if (used == 0 || ordered[i][0] > scratch[used - 1][1]) {
                scratch[used][0] = ordered[i][0];
                scratch[used][1] = ordered[i][1];
                used = used + 1;
            } else if (ordered[i][1] > scratch[used - 1][1]) {
                scratch[used - 1][1] = ordered[i][1];
            }
        }
        int[][] merged = new int[used][2];
        for (int i = 0; i < used; i++) {
            merged[i][0] = scratch[i][0];
            merged[i][1] = scratch[i][1];
        }
        return merged;
    }

    // summed length of the merged blocks
    static int coverage(int[][] bookings) {
        int covered = 0;
        int[][] merged = merge(bookings);
        for (int i = 0; i < merged.length; i++) {
            covered = covered + (merged[i][1] - merged[i][0]);
        }
        return covered;
    }

    static int overlapPairs(int[][] bookings) {
        int count = 0;
        for (int i = 0; i < bookings.length; i++) {
            for (int j = i + 1; j < bookings.length; j++) {
                if (bookings[i][0] < bookings[j][1] && bookings[j][0] < bookings[i][1]) {
                    count = count + 1;
                }
            }
        }
        return count;
    }

    public static void main(String[] args) {
        int[][] bookings = {{1, 4}, {2, 6}, {8, 10}, {15, 18},
                            {17, 20}, {9, 12}, {25, 30}, {5, 6}};
        int[][] merged = merge(bookings);
        StringBuilder text = new StringBuilder();
        for (int i = 0; i < merged.length; i++) {
            if (i > 0) {
                text.append(",");
            }
            text.append(merged[i][0] + "-" + merged[i][1]);
        }
        System.out.println("merged " + text.toString());
        System.out.println("cover " + coverage(bookings));
        System.out.println("overlaps " + overlapPairs(bookings));
        System.out.println("blocks " + merged.length);
    }
}
