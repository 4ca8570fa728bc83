public class BankLedger {
    static int applyEntry(int balance, String kind, int amount) {
        if (kind.equals("deposit")) {
            return balance + amount;
        }
        if (kind.equals("withdraw")) {
            if (amount <= balance) {
                return balance - amount;
            }
            return balance;
        }
        if (kind.equals("fee")) {
            return balance - amount;
        }
        return balance;
    }

    static int rejectedCount(int opening, String[] kinds, int[] amounts) {
        int balance = opening;
        int rejected = 0;
        for (int i = 0; i < kinds.length; i++) {
            int updated = applyEntry(balance, kinds[i], amounts[i]);
            if (updated == balance && kinds[i].equals("withdraw")) {
                rejected = rejected + 1;
            }
            balance = updated;
        }
        return rejected;
    }

    static int finalBalance(int opening, String[] kinds, int[] amounts) {
        int balance = opening;
        for (int i = 0; i < kinds.length; i++) {
            balance = applyEntry(balance, kinds[i], amounts[i]);
        }
        return balance;
    }

    // integer-floor compounding month by month
    static int projection(int balance, int ratePercent, int months) {
        int projected = balance;
        for (int m = 0; m < months; m++) {
            int gain = projected * ratePercent / 100;
            projected = projected + gain;
        }
        return projected;
    }

    static int lowWaterMark(int opening, String[] kinds, int[] amounts) {
        int balance = opening;
        int lowest = opening;
        for (int i = 0; i < kinds.length; i++) {
            balance = applyEntry(balance, kinds[i], amounts[i]);
            if (balance < lowest) {
                lowest = balance;
            }
        }
        return lowest;
    }

    public static void main(String[] args) {
        String[] kinds = {"deposit", "withdraw", "fee", "withdraw", "deposit",
                          "withdraw", "fee", "deposit", "withdraw"};
        int[] amounts = {500, 120, 15, 800, 260, 90, 15, 75, 430};
        int closing = finalBalance(300, kinds, amounts);
        System.out.println("final " + closing);
        System.out.println("bounced " + rejectedCount(300, kinds, amounts));
        System.out.println("low " + lowWaterMark(300, kinds, amounts));
        System.out.println("grow3 " + projection(closing, 2, 3));
        System.out.println("grow12 " + projection(closing, 2, 12));
        int inflow = 0;
        for (int i = 0; i < kinds.length; i++) {
            if (kinds[i].equals("deposit")) {
                inflow = inflow + amounts[i];
            }
        }
        System.out.println("inflow " + inflow);
    }
}
