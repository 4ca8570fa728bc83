public class PolynomialEval {
    static long hornerEval(int[] coefficients, int x) {
        long result = 0;
        for (int i = 0; i < coefficients.length; i++) {
            result = result * x + coefficients[i];
        }
        return result;
    }

    static int[] polyAdd(int[] left, int[] right) {
        int size = left.length;
        if (right.length > size) {
            size = right.length;
        }
        int[] total = new int[size];
        for (int i = 0; i < size; i++) {
            int fromLeft = 0;
            if (i >= size - left.length) {
                fromLeft = left[i - (size - left.length)];
            }
            int fromRight = 0;
            if (i >= size - right.length) {
                fromRight = right[i - (size - right.length)];
            }
            total[i] = fromLeft + fromRight;
        }
        return total;
    }

    static int[] polyMultiply(int[] left, int[] right) {
        int[] product = new int[left.length + right.length - 1];
        for (int i = 0; i < left.length; i++) {
            for (int j = 0; j < right.length; j++) {
                product[i + j] = product[i + j] + left[i] * right[j];
            }
        }
        return product;
    }

    // descending-power formatting, every term shown
    static String format(int[] coefficients) {
        StringBuilder text = new StringBuilder();
        int degree = coefficients.length - 1;
        for (int i = 0; i < coefficients.length; i++) {
            if (i > 0) {
                text.append("+");
            }
            text.append(coefficients[i] + "x" + (degree - i));
        }
        return text.toString();
    }

    public static void main(String[] args) {
        int[] p = {2, -3, 0, 5};
        int[] q = {1, 4, -2};
        System.out.println("p(3) " + hornerEval(p, 3));
        System.out.println("q(3) " + hornerEval(q, 3));
        System.out.println("sum " + format(polyAdd(p, q)));
        int[] m = polyMultiply(p, q);
        System.out.println("prod " + format(m));
        System.out.println("prod(2) " + hornerEval(m, 2));
        long check = hornerEval(p, 2) * hornerEval(q, 2);
        System.out.println("check " + check);
        long sweep = 0;
        for (int x = -2; x < 5; x++) {
            sweep = sweep + hornerEval(p, x);
        }
        System.out.println("sweep " + sweep);
    }
}
