public class PrimeSieve {
    static boolean[] sieve(int limit) {
        boolean[] composite = new boolean[limit + 1];
        composite[0] = true;
        composite[1] = true;
        int step = 2;
        while (step * step <= limit) {
            if (!composite[step]) {
                int multiple = step * step;
                while (multiple <= limit) {
                    composite[multiple] = true;
                    multiple = multiple + step;
                }
            }
            step = step + 1;
        }
        return composite;
    }

    static int countPrimes(boolean[] composite) {
        int count = 0;
        for (int n = 2; n < composite.length; n++) {
            if (!composite[n]) {
                count = count + 1;
            }
        }
        return count;
    }

    static int largestPrime(boolean[] composite) {
        int best = 2;
        for (int n = 2; n < composite.length; n++) {
            if (!composite[n]) {
                best = n;
            }
        }
        return best;
    }

    // twin primes are consecutive odd primes differing by two
    static int twinCount(boolean[] composite) {
        int twins = 0;
        for (int n = 2; n + 2 < composite.length; n++) {
            if (!composite[n] && !composite[n + 2]) {
                twins = twins + 1;
            }
        }
        return twins;
    }

    static long primeSum(boolean[] composite) {
        long total = 0;
        for (int n = 2; n < composite.length; n++) {
            if (!composite[n]) {
                total = total + n;
            }
        }
        return total;
    }

    public static void main(String[] args) {
        boolean[] marks = sieve(200);
        System.out.println("count " + countPrimes(marks));
        System.out.println("last " + largestPrime(marks));
        System.out.println("twins " + twinCount(marks));
        System.out.println("sum " + primeSum(marks));
        boolean[] small = sieve(30);
        StringBuilder line = new StringBuilder();
        for (int n = 2; n <= 30; n++) {
            if (!small[n]) {
                if (line.length() > 0) {
                    line.append(",");
                }
                line.append(n);
            }
        }
        System.out.println("small " + line.toString());
    }
}
