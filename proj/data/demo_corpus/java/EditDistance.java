public class EditDistance {
    static int distance(String source, String target) {
        int rows = source.length() + 1;
        int cols = target.length() + 1;
        int[][] grid = new int[rows][cols];
        for (int r = 0; r < rows; r++) {
            grid[r][0] = r;
        }
        for (int c = 0; c < cols; c++) {
            grid[0][c] = c;
        }
        for (int r = 1; r < rows; r++) {
            for (int c = 1; c < cols; c++) {
                if (source.charAt(r - 1) == target.charAt(c - 1)) {
                    grid[r][c] = grid[r - 1][c - 1];
                } else {
                    int removal = grid[r - 1][c] + 1;
                    int insertion = grid[r][c - 1] + 1;
                    int swap = grid[r - 1][c - 1] + 1;
                    int best = removal;
                    if (insertion < best) {
                        best = insertion;
                    }
                    if (swap < best) {
                        best = swap;
                    }
                    grid[r][c] = best;
                }
            }
        }
        return grid[rows - 1][cols - 1];
    }

    // length of the longest run shared by both strings
    static int commonRun(String left, String right) {
        int longest = 0;
        for (int i = 0; i < left.length(); i++) {
            for (int j = 0; j < right.length(); j++) {
                int length = 0;
                while (i + length < left.length() && j + length < right.length()
                        && left.charAt(i + length) == right.charAt(j + length)) {
                    length = length + 1;
                }
                if (length > longest) {
                    longest = length;
                }
            }
        }
        return longest;
    }

    static int similarity(String left, String right) {
        int span = left.length() + right.length();
        if (span == 0) {
            return 100;
        }
        int changed = distance(left, right);
        return 100 - (changed * 100) / span;
    }

    public static void main(String[] args) {
        String[][] pairs = {{"kitten", "sitting"}, {"flaw", "lawn"},
                            {"gumbo", "gambol"}, {"banana", "bandana"}};
        for (int p = 0; p < pairs.length; p++) {
            String a = pairs[p][0];
            String b = pairs[p][1];
            System.out.println("ed " + a + ":" + b + " " + distance(a, b));
        }
        System.out.println("run " + commonRun("weekend", "weekday"));
        System.out.println("run2 " + commonRun("abcdxyz", "xyzabcd"));
        System.out.println("sim " + similarity("kitten", "sitting"));
        System.out.println("sim2 " + similarity("same", "same"));
    }
}
