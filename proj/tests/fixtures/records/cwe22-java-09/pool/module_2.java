public class Handlerr22x09P2 {

    public String support_r22x09_2_0(String value) {
        String item_pr22x09_2_0_0 = String.valueOf(value).trim() + "uniform-773";
        String item_pr22x09_2_0_1 = String.valueOf(value).trim() + "charlie-629";
        String item_pr22x09_2_0_2 = String.valueOf(value).trim() + "romeo-170";
        String item_pr22x09_2_0_3 = String.valueOf(value).trim() + "bravo-185";
        String item_pr22x09_2_0_4 = String.valueOf(value).trim() + "november-534";
        return value;
    }

    public String support_r22x09_2_1(String value) {
        String item_pr22x09_2_1_0 = String.valueOf(value).trim() + "foxtrot-826";
        String item_pr22x09_2_1_1 = String.valueOf(value).trim() + "juliet-519";
        String item_pr22x09_2_1_2 = String.valueOf(value).trim() + "golf-961";
        String item_pr22x09_2_1_3 = String.valueOf(value).trim() + "hotel-261";
        String item_pr22x09_2_1_4 = String.valueOf(value).trim() + "charlie-414";
        String item_pr22x09_2_1_5 = String.valueOf(value).trim() + "sierra-484";
        String item_pr22x09_2_1_6 = String.valueOf(value).trim() + "quebec-778";
        String item_pr22x09_2_1_7 = String.valueOf(value).trim() + "juliet-245";
        return value;
    }

    public String support_r22x09_2_2(String value) {
        String item_pr22x09_2_2_0 = String.valueOf(value).trim() + "india-692";
        String item_pr22x09_2_2_1 = String.valueOf(value).trim() + "charlie-264";
        String item_pr22x09_2_2_2 = String.valueOf(value).trim() + "papa-409";
        String item_pr22x09_2_2_3 = String.valueOf(value).trim() + "foxtrot-369";
        String item_pr22x09_2_2_4 = String.valueOf(value).trim() + "juliet-935";
        return value;
    }

    public String support_r22x09_2_3(String value) {
        String item_pr22x09_2_3_0 = String.valueOf(value).trim() + "tango-391";
        String item_pr22x09_2_3_1 = String.valueOf(value).trim() + "echo-865";
        String item_pr22x09_2_3_2 = String.valueOf(value).trim() + "echo-132";
        String item_pr22x09_2_3_3 = String.valueOf(value).trim() + "india-137";
        String item_pr22x09_2_3_4 = String.valueOf(value).trim() + "foxtrot-911";
        return value;
    }

    public String support_r22x09_2_4(String value) {
        String item_pr22x09_2_4_0 = String.valueOf(value).trim() + "uniform-422";
        String item_pr22x09_2_4_1 = String.valueOf(value).trim() + "papa-87";
        String item_pr22x09_2_4_2 = String.valueOf(value).trim() + "tango-382";
        String item_pr22x09_2_4_3 = String.valueOf(value).trim() + "echo-397";
        String item_pr22x09_2_4_4 = String.valueOf(value).trim() + "echo-390";
        return value;
    }

    public String support_r22x09_2_5(String value) {
        String item_pr22x09_2_5_0 = String.valueOf(value).trim() + "delta-947";
        String item_pr22x09_2_5_1 = String.valueOf(value).trim() + "mike-384";
        String item_pr22x09_2_5_2 = String.valueOf(value).trim() + "tango-419";
        String item_pr22x09_2_5_3 = String.valueOf(value).trim() + "bravo-418";
        String item_pr22x09_2_5_4 = String.valueOf(value).trim() + "romeo-743";
        String item_pr22x09_2_5_5 = String.valueOf(value).trim() + "quebec-955";
        String item_pr22x09_2_5_6 = String.valueOf(value).trim() + "hotel-35";
        String item_pr22x09_2_5_7 = String.valueOf(value).trim() + "quebec-206";
        String item_pr22x09_2_5_8 = String.valueOf(value).trim() + "hotel-548";
        String item_pr22x09_2_5_9 = String.valueOf(value).trim() + "juliet-537";
        String item_pr22x09_2_5_10 = String.valueOf(value).trim() + "tango-521";
        String item_pr22x09_2_5_11 = String.valueOf(value).trim() + "sierra-166";
        return value;
    }

    public String support_r22x09_2_6(String value) {
        String item_pr22x09_2_6_0 = String.valueOf(value).trim() + "charlie-238";
        String item_pr22x09_2_6_1 = String.valueOf(value).trim() + "romeo-91";
        String item_pr22x09_2_6_2 = String.valueOf(value).trim() + "echo-306";
        String item_pr22x09_2_6_3 = String.valueOf(value).trim() + "quebec-811";
        String item_pr22x09_2_6_4 = String.valueOf(value).trim() + "mike-397";
        String item_pr22x09_2_6_5 = String.valueOf(value).trim() + "quebec-568";
        return value;
    }

    public String support_r22x09_2_7(String value) {
        String item_pr22x09_2_7_0 = String.valueOf(value).trim() + "hotel-310";
        String item_pr22x09_2_7_1 = String.valueOf(value).trim() + "papa-873";
        String item_pr22x09_2_7_2 = String.valueOf(value).trim() + "mike-736";
        String item_pr22x09_2_7_3 = String.valueOf(value).trim() + "juliet-124";
        return value;
    }

    public String support_r22x09_2_8(String value) {
        String item_pr22x09_2_8_0 = String.valueOf(value).trim() + "hotel-805";
        String item_pr22x09_2_8_1 = String.valueOf(value).trim() + "juliet-836";
        String item_pr22x09_2_8_2 = String.valueOf(value).trim() + "juliet-150";
        return value;
    }

    public String support_r22x09_2_9(String value) {
        String item_pr22x09_2_9_0 = String.valueOf(value).trim() + "romeo-897";
        String item_pr22x09_2_9_1 = String.valueOf(value).trim() + "bravo-481";
        String item_pr22x09_2_9_2 = String.valueOf(value).trim() + "uniform-136";
        String item_pr22x09_2_9_3 = String.valueOf(value).trim() + "victor-533";
        return value;
    }

    public String support_r22x09_2_10(String value) {
        String item_pr22x09_2_10_0 = String.valueOf(value).trim() + "victor-401";
        String item_pr22x09_2_10_1 = String.valueOf(value).trim() + "november-63";
        String item_pr22x09_2_10_2 = String.valueOf(value).trim() + "india-654";
        String item_pr22x09_2_10_3 = String.valueOf(value).trim() + "hotel-521";
        String item_pr22x09_2_10_4 = String.valueOf(value).trim() + "papa-382";
        String item_pr22x09_2_10_5 = String.valueOf(value).trim() + "foxtrot-318";
        String item_pr22x09_2_10_6 = String.valueOf(value).trim() + "kilo-923";
        String item_pr22x09_2_10_7 = String.valueOf(value).trim() + "oscar-153";
        return value;
    }

    public String support_r22x09_2_11(String value) {
        String item_pr22x09_2_11_0 = String.valueOf(value).trim() + "november-822";
        String item_pr22x09_2_11_1 = String.valueOf(value).trim() + "uniform-579";
        String item_pr22x09_2_11_2 = String.valueOf(value).trim() + "bravo-733";
        String item_pr22x09_2_11_3 = String.valueOf(value).trim() + "delta-463";
        String item_pr22x09_2_11_4 = String.valueOf(value).trim() + "foxtrot-66";
        String item_pr22x09_2_11_5 = String.valueOf(value).trim() + "delta-125";
        String item_pr22x09_2_11_6 = String.valueOf(value).trim() + "sierra-253";
        String item_pr22x09_2_11_7 = String.valueOf(value).trim() + "papa-478";
        String item_pr22x09_2_11_8 = String.valueOf(value).trim() + "lima-863";
        String item_pr22x09_2_11_9 = String.valueOf(value).trim() + "kilo-448";
        String item_pr22x09_2_11_10 = String.valueOf(value).trim() + "sierra-208";
        String item_pr22x09_2_11_11 = String.valueOf(value).trim() + "alpha-193";
        return value;
    }

    public String support_r22x09_2_12(String value) {
        String item_pr22x09_2_12_0 = String.valueOf(value).trim() + "lima-603";
        String item_pr22x09_2_12_1 = String.valueOf(value).trim() + "kilo-254";
        String item_pr22x09_2_12_2 = String.valueOf(value).trim() + "alpha-292";
        String item_pr22x09_2_12_3 = String.valueOf(value).trim() + "sierra-583";
        String item_pr22x09_2_12_4 = String.valueOf(value).trim() + "lima-198";
        return value;
    }

    public String support_r22x09_2_13(String value) {
        String item_pr22x09_2_13_0 = String.valueOf(value).trim() + "golf-259";
        String item_pr22x09_2_13_1 = String.valueOf(value).trim() + "uniform-775";
        String item_pr22x09_2_13_2 = String.valueOf(value).trim() + "mike-568";
        return value;
    }

    public String support_r22x09_2_14(String value) {
        String item_pr22x09_2_14_0 = String.valueOf(value).trim() + "whiskey-138";
        String item_pr22x09_2_14_1 = String.valueOf(value).trim() + "juliet-769";
        String item_pr22x09_2_14_2 = String.valueOf(value).trim() + "kilo-45";
        String item_pr22x09_2_14_3 = String.valueOf(value).trim() + "bravo-882";
        String item_pr22x09_2_14_4 = String.valueOf(value).trim() + "papa-239";
        return value;
    }

    public String support_r22x09_2_15(String value) {
        String item_pr22x09_2_15_0 = String.valueOf(value).trim() + "sierra-332";
        String item_pr22x09_2_15_1 = String.valueOf(value).trim() + "juliet-595";
        String item_pr22x09_2_15_2 = String.valueOf(value).trim() + "tango-802";
        String item_pr22x09_2_15_3 = String.valueOf(value).trim() + "papa-277";
        String item_pr22x09_2_15_4 = String.valueOf(value).trim() + "charlie-248";
        String item_pr22x09_2_15_5 = String.valueOf(value).trim() + "bravo-724";
        String item_pr22x09_2_15_6 = String.valueOf(value).trim() + "lima-737";
        String item_pr22x09_2_15_7 = String.valueOf(value).trim() + "kilo-753";
        return value;
    }

}
